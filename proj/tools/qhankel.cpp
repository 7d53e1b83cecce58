// qhankel: exact q-analogue Whitney/Dowling sequences, symbolic Hankel
// transforms, and verification of the published closed forms against a
// dual-engine determinant oracle.
//
// Exit codes: 0 success / all comparisons matched, 1 a verification row
// mismatched (report still emitted), 2 usage error, 3 internal error
// (determinant engines disagreeing is fatal by design).

#include "qhankel/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace qhankel;
using nlohmann::ordered_json;

struct Substitutions {
  std::optional<Rational> q, a, x;
};

Substitutions parse_substs(const std::vector<std::string>& raw) {
  Substitutions out;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq != 1)
      throw CLI::ValidationError("--subst", "expected VAR=RATIONAL, got '" + item + "'");
    const char var = item[0];
    const Rational value = Rational::parse(item.substr(eq + 1));
    switch (var) {
      case 'q': out.q = value; break;
      case 'a': out.a = value; break;
      case 'x': out.x = value; break;
      default: throw CLI::ValidationError("--subst", "variable must be one of q, a, x");
    }
  }
  return out;
}

SymPoly apply_substs(SymPoly f, const Substitutions& s) {
  if (s.q) f = f.subst_q(*s.q);
  if (s.a) f = f.subst_a(*s.a);
  if (s.x) f = f.subst_x(*s.x);
  return f;
}

ordered_json subst_json(const Substitutions& s) {
  ordered_json j = ordered_json::object();
  if (s.q) j["q"] = s.q->str();
  if (s.a) j["a"] = s.a->str();
  if (s.x) j["x"] = s.x->str();
  return j;
}

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "text") return ReportFormat::text;
  throw CLI::ValidationError("--format", "expected json, csv or text");
}

SeqKind parse_seq_kind(const std::string& s) {
  if (s == "phi" || s == "phi_at_a") return SeqKind::phi_at_a;
  if (s == "moment" || s == "moment_weighted") return SeqKind::moment_weighted;
  if (s == "dowling_first") return SeqKind::dowling_first;
  if (s == "dowling_second") return SeqKind::dowling_second;
  if (s == "dowling_third") return SeqKind::dowling_third;
  if (s == "bell" || s == "bell_classical") return SeqKind::bell_classical;
  throw CLI::ValidationError("--seq", "unknown sequence '" + s + "'");
}

void write_out(const std::string& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  f << doc;
}

ordered_json doc_header(const char* command, int m, int r) {
  ordered_json j;
  j["tool"] = "qhankel";
  j["schema"] = 1;
  j["params"] = {{"command", command}, {"m", m}, {"r", r}};
  return j;
}

int run_table(int m, int r, const std::string& form_s, int n_max,
              const Substitutions& subs, ReportFormat fmt, const std::string& out) {
  WhitneyForm form = form_s == "first"    ? WhitneyForm::first
                     : form_s == "second" ? WhitneyForm::second
                                          : WhitneyForm::third;
  WhitneyTable table({m, r});
  std::vector<std::vector<std::string>> rows;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::string> row;
    for (int k = 0; k <= n; ++k) row.push_back(apply_substs(table.entry(n, k, form), subs).str());
    rows.push_back(std::move(row));
  }
  std::string doc;
  switch (fmt) {
    case ReportFormat::json: {
      ordered_json j = doc_header("table", m, r);
      j["params"]["form"] = form_s;
      j["params"]["n_max"] = n_max;
      j["params"]["subst"] = subst_json(subs);
      j["rows"] = rows;
      doc = j.dump(2) + "\n";
      break;
    }
    case ReportFormat::csv: {
      std::ostringstream os;
      os << "n,k,value\n";
      for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) os << n << ',' << k << ',' << rows[n][k] << '\n';
      doc = os.str();
      break;
    }
    case ReportFormat::text: {
      std::ostringstream os;
      for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "  " : "") << row[k];
        os << '\n';
      }
      doc = os.str();
      break;
    }
  }
  write_out(doc, out);
  return 0;
}

int run_seq(int m, int r, const std::string& seq_s, int n_max, const Substitutions& subs,
            ReportFormat fmt, const std::string& out) {
  const SeqKind kind = parse_seq_kind(seq_s);
  SeqCache cache(SeqSpec{{m, r}, kind, subs.q, subs.a});
  std::vector<std::string> values;
  for (int n = 0; n <= n_max; ++n) {
    SymPoly v = cache.at(n);
    if (subs.x) v = v.subst_x(*subs.x);
    values.push_back(v.str());
  }
  std::string doc;
  switch (fmt) {
    case ReportFormat::json: {
      ordered_json j = doc_header("seq", m, r);
      j["params"]["seq"] = seq_name(kind);
      j["params"]["n_max"] = n_max;
      j["params"]["subst"] = subst_json(subs);
      j["values"] = values;
      doc = j.dump(2) + "\n";
      break;
    }
    case ReportFormat::csv: {
      std::ostringstream os;
      os << "n,value\n";
      for (int n = 0; n <= n_max; ++n) os << n << ',' << values[n] << '\n';
      doc = os.str();
      break;
    }
    case ReportFormat::text: {
      std::ostringstream os;
      for (int n = 0; n <= n_max; ++n) os << "s(" << n << ") = " << values[n] << '\n';
      doc = os.str();
      break;
    }
  }
  write_out(doc, out);
  return 0;
}

int run_hankel(int m, int r, const std::string& seq_s, int order, int offset,
               const std::string& algo_s, const Substitutions& subs, ReportFormat fmt,
               const std::string& out) {
  const SeqKind kind = parse_seq_kind(seq_s);
  const DetAlgo algo = algo_s == "laplace"   ? DetAlgo::laplace
                       : algo_s == "bareiss" ? DetAlgo::bareiss
                                             : DetAlgo::both;
  SeqCache cache(SeqSpec{{m, r}, kind, subs.q, subs.a});
  const std::string value = hankel_transform(cache, order, offset, algo).str();
  std::string doc;
  switch (fmt) {
    case ReportFormat::json: {
      ordered_json j = doc_header("hankel", m, r);
      j["params"]["seq"] = seq_name(kind);
      j["params"]["order"] = order;
      j["params"]["offset"] = offset;
      j["params"]["algo"] = algo_s;
      j["params"]["subst"] = subst_json(subs);
      j["value"] = value;
      doc = j.dump(2) + "\n";
      break;
    }
    case ReportFormat::csv:
      doc = "order,offset,value\n" + std::to_string(order) + "," + std::to_string(offset) + "," +
            value + "\n";
      break;
    case ReportFormat::text:
      doc = value + "\n";
      break;
  }
  write_out(doc, out);
  return 0;
}

int run_verify(const std::string& target_s, int m, int r, int n_max, const std::string& seq_s,
               const std::string& variant_s, ReportFormat fmt, const std::string& out) {
  Target target;
  if (target_s == "bell") target = Target::bell;
  else if (target_s == "phi") target = Target::phi;
  else if (target_s == "c_product") target = Target::c_product;
  else if (target_s == "cigler") target = Target::cigler;
  else if (target_s == "dowling_first") target = Target::dowling_first;
  else if (target_s == "dowling_second") target = Target::dowling_second;
  else if (target_s == "dowling_third") target = Target::dowling_third;
  else if (target_s == "phi_shifted") target = Target::phi_shifted;
  else throw CLI::ValidationError("--target", "unknown target '" + target_s + "'");

  VerifyOptions opt;
  if (!seq_s.empty()) {
    if (target != Target::phi && target != Target::c_product)
      throw CLI::ValidationError("--seq", "only the phi and c_product targets take a moment variant");
    if (seq_s == "phi") opt.moments = MomentVariant::phi_at_a;
    else if (seq_s == "moment") opt.moments = MomentVariant::moment_weighted;
    else throw CLI::ValidationError("--seq", "expected phi or moment");
  }
  if (!variant_s.empty()) {
    const auto bad = [&] {
      return CLI::ValidationError("--variant",
                                  "'" + variant_s + "' is not valid for target " + target_s);
    };
    switch (target) {
      case Target::phi:
        if (variant_s == "corrected") opt.base_qm_corrected = true;
        else if (variant_s != "literal") throw bad();
        break;
      case Target::dowling_first:
        if (variant_s == "literal") opt.literal_dowling_first = true;
        else if (variant_s == "corrected") opt.base_qm_corrected = true;
        else if (variant_s != "specialized") throw bad();
        break;
      case Target::dowling_second:
        if (variant_s == "corrected") opt.base_qm_corrected = true;
        else if (variant_s != "literal") throw bad();
        break;
      case Target::dowling_third:
        if (variant_s == "flipped") opt.flip_r_sign = true;
        else if (variant_s != "literal") throw bad();
        break;
      case Target::phi_shifted:
        if (variant_s == "gram_schmidt") opt.shifted = ShiftedVariant::gram_schmidt;
        else if (variant_s != "printed") throw bad();
        break;
      default: throw bad();
    }
  }
  if (target == Target::cigler && m != 1)
    throw CLI::ValidationError("--m", "the cigler target requires m = 1");
  if (target == Target::bell && (m != 1 || r != 0))
    throw CLI::ValidationError("--target", "the bell target uses m = 1, r = 0");

  const VerifyReport report = verify(target, {m, r}, n_max, opt);
  write_out(emit_report(report, fmt), out);
  return report.first_mismatch ? 1 : 0;
}

int run_orth(int m, int r, int n_max, ReportFormat fmt, const std::string& out) {
  const Params p{m, r};
  struct Row {
    int n;
    RecurrenceCoeffs rec;
    PrintedCoeffs printed;
    bool g_match, f_match, c_match;
  };
  std::vector<Row> rows;
  bool any_mismatch = false;
  for (int n = 1; n <= n_max; ++n) {
    Row row{n, recover_recurrence(p, n), printed_recurrence_coeffs(p, n), false, false, false};
    row.g_match = row.rec.g_rec == RatExpr(row.printed.g);
    row.f_match = row.rec.f_rec == RatExpr(row.printed.f);
    row.c_match = row.rec.c_rec == RatExpr(row.printed.c);
    any_mismatch = any_mismatch || !row.g_match || !row.f_match || !row.c_match;
    rows.push_back(std::move(row));
  }
  std::string doc;
  switch (fmt) {
    case ReportFormat::json: {
      ordered_json j = doc_header("orth", m, r);
      j["params"]["n_max"] = n_max;
      auto arr = ordered_json::array();
      for (const auto& row : rows)
        arr.push_back({{"n", row.n},
                       {"g_recovered", row.rec.g_rec.str()},
                       {"g_printed", row.printed.g.str()},
                       {"g_match", row.g_match},
                       {"f_recovered", row.rec.f_rec.str()},
                       {"f_printed", row.printed.f.str()},
                       {"f_match", row.f_match},
                       {"c_recovered", row.rec.c_rec.str()},
                       {"c_printed", row.printed.c.str()},
                       {"c_match", row.c_match}});
      j["rows"] = std::move(arr);
      j["any_mismatch"] = any_mismatch;
      doc = j.dump(2) + "\n";
      break;
    }
    case ReportFormat::csv: {
      std::ostringstream os;
      os << "n,g_recovered,g_printed,g_match,f_recovered,f_printed,f_match,"
            "c_recovered,c_printed,c_match\n";
      for (const auto& row : rows)
        os << row.n << ',' << row.rec.g_rec.str() << ',' << row.printed.g.str() << ','
           << (row.g_match ? "true" : "false") << ',' << row.rec.f_rec.str() << ','
           << row.printed.f.str() << ',' << (row.f_match ? "true" : "false") << ','
           << row.rec.c_rec.str() << ',' << row.printed.c.str() << ','
           << (row.c_match ? "true" : "false") << '\n';
      doc = os.str();
      break;
    }
    case ReportFormat::text: {
      std::ostringstream os;
      os << "orth m=" << m << " r=" << r << '\n';
      for (const auto& row : rows) {
        os << "n=" << row.n << " g: recovered=" << row.rec.g_rec.str()
           << " printed=" << row.printed.g.str() << " match=" << (row.g_match ? "true" : "false")
           << '\n';
        os << "n=" << row.n << " f: recovered=" << row.rec.f_rec.str()
           << " printed=" << row.printed.f.str() << " match=" << (row.f_match ? "true" : "false")
           << '\n';
        os << "n=" << row.n << " c: recovered=" << row.rec.c_rec.str()
           << " printed=" << row.printed.c.str() << " match=" << (row.c_match ? "true" : "false")
           << '\n';
      }
      doc = os.str();
      break;
    }
  }
  write_out(doc, out);
  return any_mismatch ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qhankel: exact q-analogue r-Whitney/r-Dowling sequences, symbolic Hankel\n"
      "transforms, and verification of their published closed forms"};
  app.require_subcommand(1);

  int m = 1, r = 0, n_max = 3, order = 1, offset = 0;
  std::string form = "first", seq = "phi", algo = "both", target, variant, format, out;
  std::vector<std::string> subst_raw;

  const auto add_common = [&](CLI::App* cmd, const char* default_format) {
    cmd->add_option("--format", format,
                    std::string("Output format: json, csv or text (default ") + default_format +
                        ")")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", out, "Write the document to a file instead of stdout");
  };

  auto* cmd_table = app.add_subcommand("table", "Print a Whitney triangle");
  cmd_table->add_option("--m", m, "Structural parameter m >= 1")->default_val(1);
  cmd_table->add_option("--r", r, "Structural parameter r >= 0")->default_val(0);
  cmd_table->add_option("--form", form, "Triangle form: first, second or third")
      ->check(CLI::IsMember({"first", "second", "third"}))
      ->default_val("first");
  cmd_table->add_option("--n-max", n_max, "Last row index")->required();
  cmd_table->add_option("--subst", subst_raw, "Exact substitution VAR=RATIONAL (repeatable)");
  add_common(cmd_table, "text");

  auto* cmd_seq = app.add_subcommand("seq", "Print a sequence");
  cmd_seq->add_option("--m", m)->default_val(1);
  cmd_seq->add_option("--r", r)->default_val(0);
  cmd_seq->add_option("--seq", seq,
                      "Sequence: phi, moment, dowling_first, dowling_second, "
                      "dowling_third or bell")
      ->default_val("phi");
  cmd_seq->add_option("--n-max", n_max, "Last index")->required();
  cmd_seq->add_option("--subst", subst_raw, "Exact substitution VAR=RATIONAL (repeatable)");
  add_common(cmd_seq, "text");

  auto* cmd_hankel = app.add_subcommand("hankel", "Compute one Hankel determinant");
  cmd_hankel->add_option("--m", m)->default_val(1);
  cmd_hankel->add_option("--r", r)->default_val(0);
  cmd_hankel->add_option("--seq", seq)->default_val("phi");
  cmd_hankel->add_option("--order", order, "Matrix order d >= 1")->required();
  cmd_hankel->add_option("--offset", offset, "Entry offset: 0 or 1")
      ->check(CLI::IsMember({0, 1}))
      ->default_val(0);
  cmd_hankel->add_option("--algo", algo, "Determinant engine: laplace, bareiss or both")
      ->check(CLI::IsMember({"laplace", "bareiss", "both"}))
      ->default_val("both");
  cmd_hankel->add_option("--subst", subst_raw, "Exact substitution VAR=RATIONAL (repeatable)");
  add_common(cmd_hankel, "text");

  auto* cmd_verify = app.add_subcommand("verify", "Sweep a closed form against the oracle");
  cmd_verify
      ->add_option("--target", target,
                   "Closed form: bell, phi, c_product, cigler, dowling_first, "
                   "dowling_second, dowling_third or phi_shifted")
      ->required();
  cmd_verify->add_option("--m", m)->default_val(1);
  cmd_verify->add_option("--r", r)->default_val(0);
  cmd_verify->add_option("--n-max", n_max, "Last sweep index")->required();
  cmd_verify->add_option("--seq", seq, "Moment variant for phi/c_product: phi or moment")
      ->default_val("");
  cmd_verify->add_option("--variant", variant,
                         "Formula variant (target-specific): literal, corrected, specialized, "
                         "flipped, printed, gram_schmidt");
  add_common(cmd_verify, "json");

  auto* cmd_orth = app.add_subcommand("orth",
                                      "Compare recovered three-term recurrence coefficients "
                                      "with the printed ones");
  cmd_orth->add_option("--m", m)->default_val(1);
  cmd_orth->add_option("--r", r)->default_val(0);
  cmd_orth->add_option("--n-max", n_max, "Last recurrence index")->required();
  add_common(cmd_orth, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (format.empty())
      format = (cmd_verify->parsed() || cmd_orth->parsed()) ? "json" : "text";
    const ReportFormat fmt = parse_format(format);
    const Substitutions subs = parse_substs(subst_raw);
    if (cmd_table->parsed()) return run_table(m, r, form, n_max, subs, fmt, out);
    if (cmd_seq->parsed()) return run_seq(m, r, seq, n_max, subs, fmt, out);
    if (cmd_hankel->parsed()) return run_hankel(m, r, seq, order, offset, algo, subs, fmt, out);
    if (cmd_verify->parsed()) return run_verify(target, m, r, n_max, seq, variant, fmt, out);
    if (cmd_orth->parsed()) return run_orth(m, r, n_max, fmt, out);
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const OrderTooLarge& e) {
    std::cerr << "error: " << e.what() << " (use --algo bareiss for large orders)\n";
    return 2;
  } catch (const ZeroSubstitutionIntoNegativePower& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const AlgorithmDisagreement& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
