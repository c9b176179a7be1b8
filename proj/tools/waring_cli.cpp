#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "waring/decomposition.hpp"
#include "waring/errors.hpp"
#include "waring/parse.hpp"
#include "waring/realrank.hpp"

using json = nlohmann::json;
using namespace waring;

namespace {

// 0.<digits>e<exp> decimal rendering of a GMP float; deterministic for a
// given precision.
std::string float_str(const BigFloat& x, int digits = 20) {
  if (x == 0) return "0";
  mp_exp_t e;
  std::string m = x.get_str(e, 10, digits);
  std::string sign;
  if (!m.empty() && m[0] == '-') {
    sign = "-";
    m = m.substr(1);
  }
  return sign + "0." + m + "e" + std::to_string(e);
}

std::string complex_str(const BigComplex& z) {
  std::string r = float_str(z.re);
  if (z.im == 0) return r;
  if (z.re == 0) return float_str(z.im) + "*i";
  if (z.im < 0) return r + " - " + float_str(BigFloat(-z.im)) + "*i";
  return r + " + " + float_str(z.im) + "*i";
}

json form_json(const BinaryForm& f) {
  json coeffs = json::array();
  for (int i = 0; i <= f.degree; ++i) coeffs.push_back(to_string(f.coeffs[i]));
  return json{{"degree", f.degree}, {"coeffs", coeffs}};
}

json certificate_json(const RankCertificate& cert) {
  json out{{"degree", cert.degree},
           {"rank", cert.rank},
           {"method", to_string(cert.method)}};
  if (cert.witness) {
    out["g1"] = form_json(cert.witness->g1);
    out["g2"] = form_json(cert.witness->g2);
    out["g1_square_free"] = cert.g1_square_free;
  }
  return out;
}

void emit(const json& obj, const std::string& human, bool as_json,
          std::ostream& os) {
  if (as_json)
    os << obj.dump(2) << "\n";
  else
    os << human;
}

int count_terms(const BinaryForm& f) {
  int n = 0;
  for (int i = 0; i <= f.degree; ++i)
    if (f.coeffs[i] != 0) ++n;
  return n;
}

// rank for a parsed form, routing monomials and binomials to the closed
// formulas; for binomials the Sylvester oracle cross-check is on by default.
RankCertificate rank_dispatch(const BinaryForm& f, bool verify, bool* verified) {
  const int terms = count_terms(f);
  if (terms == 1) {
    int xe = 0;
    for (int i = 0; i <= f.degree; ++i)
      if (f.coeffs[i] != 0) xe = i;
    RankCertificate cert = monomial_rank(xe, f.degree - xe);
    if (verify && verified) {
      RankCertificate oracle = waring_rank(f);
      if (oracle.rank != cert.rank)
        throw SearchFailedError("closed formula disagrees with Sylvester oracle");
      *verified = true;
    }
    return cert;
  }
  if (terms == 2) {
    BinomialShape sh = normalize_binomial(f);
    RankCertificate cert = binomial_rank(sh);
    if (verify) {
      RankCertificate oracle = waring_rank(f);
      if (oracle.rank != cert.rank)
        throw SearchFailedError("closed formula disagrees with Sylvester oracle");
      cert.witness = oracle.witness;
      cert.g1_square_free = oracle.g1_square_free;
      if (verified) *verified = true;
    }
    return cert;
  }
  return waring_rank(f);
}

struct TableRow {
  int r, s, alpha, delta, q, j, rank;
  bool verified;
};

int run(int argc, char** argv) {
  CLI::App app{"Waring rank of binary forms over the rationals"};
  app.require_subcommand(1);

  std::string expr;
  bool as_json = false, no_verify = false, as_csv = false, do_verify = false;
  unsigned long precision = 128;
  std::uint64_t seed = kDefaultSeed;
  int opt_r = 0, opt_s = 0, opt_alpha = 1;
  int max_r = 4, max_s = 4, max_alpha = 4;
  std::string out_path;

  auto* rank_cmd = app.add_subcommand("rank", "Waring rank of a form");
  rank_cmd->add_option("form", expr, "polynomial in x, y")->required();
  rank_cmd->add_flag("--json", as_json);
  rank_cmd->add_flag("--no-verify", no_verify,
                     "skip the Sylvester cross-check for binomials");

  auto* apolar_cmd = app.add_subcommand("apolar", "generators of the apolar ideal");
  apolar_cmd->add_option("form", expr)->required();
  apolar_cmd->add_flag("--json", as_json);

  auto* hf_cmd = app.add_subcommand("hf", "Hilbert function of T/F_perp");
  hf_cmd->add_option("form", expr)->required();
  hf_cmd->add_flag("--json", as_json);

  auto* dec_cmd = app.add_subcommand("decompose", "explicit Waring decomposition");
  dec_cmd->add_option("form", expr)->required();
  dec_cmd->add_flag("--json", as_json);
  dec_cmd->add_option("--precision", precision, "working precision in bits");
  dec_cmd->add_option("--seed", seed, "seed for the square-free pencil search");

  auto* real_cmd = app.add_subcommand("real", "real Waring rank facts");
  real_cmd->add_option("form", expr)->required();
  real_cmd->add_flag("--json", as_json);

  auto* bin_cmd = app.add_subcommand("binomial", "closed-form rank from (r, s, alpha)");
  bin_cmd->add_option("--r", opt_r)->required();
  bin_cmd->add_option("--s", opt_s)->required();
  bin_cmd->add_option("--alpha", opt_alpha)->required();
  bin_cmd->add_flag("--json", as_json);

  auto* table_cmd = app.add_subcommand("table", "rank grid over (r, s, alpha)");
  table_cmd->add_option("--max-r", max_r);
  table_cmd->add_option("--max-s", max_s);
  table_cmd->add_option("--max-alpha", max_alpha);
  table_cmd->add_flag("--verify", do_verify, "cross-check each cell with Sylvester");
  table_cmd->add_flag("--csv", as_csv);
  table_cmd->add_flag("--json", as_json);
  table_cmd->add_option("--out", out_path, "write output to a file");

  CLI11_PARSE(app, argc, argv);

  std::ofstream out_file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    out_file.open(out_path);
    if (!out_file) throw Error("cannot open output file: " + out_path);
    os = &out_file;
  }

  if (rank_cmd->parsed()) {
    BinaryForm f = parse_form(expr);
    bool verified = false;
    RankCertificate cert = rank_dispatch(f, !no_verify, &verified);
    std::string human = "rank = " + std::to_string(cert.rank) + "  (degree " +
                        std::to_string(cert.degree) + ", method " +
                        to_string(cert.method) +
                        (verified ? ", verified against sylvester" : "") + ")\n";
    if (cert.witness) {
      human += "g1 = " + render_form(cert.witness->g1) +
               (cert.g1_square_free ? "  (square-free)\n" : "  (not square-free)\n");
      human += "g2 = " + render_form(cert.witness->g2) + "\n";
    }
    json obj = certificate_json(cert);
    if (!no_verify && count_terms(f) <= 2) obj["verified"] = verified;
    emit(obj, human, as_json, *os);
  } else if (apolar_cmd->parsed()) {
    BinaryForm f = parse_form(expr);
    ApolarPair pair = apolar_generators(f);
    std::string human = "g1 (degree " + std::to_string(pair.d1) + ") = " +
                        render_form(pair.g1) + "\n" + "g2 (degree " +
                        std::to_string(pair.d2) + ") = " + render_form(pair.g2) + "\n";
    emit(json{{"g1", form_json(pair.g1)}, {"g2", form_json(pair.g2)}}, human,
         as_json, *os);
  } else if (hf_cmd->parsed()) {
    BinaryForm f = parse_form(expr);
    HilbertFunctionTable t = hilbert_function(f);
    std::string human;
    for (std::size_t i = 0; i < t.values.size(); ++i)
      human += (i ? " " : "") + std::to_string(t.values[i]);
    human += "\n";
    emit(json{{"degree", t.degree}, {"values", t.values}}, human, as_json, *os);
  } else if (dec_cmd->parsed()) {
    BinaryForm f = parse_form(expr);
    WaringDecomposition dec = decompose(f, precision, seed);
    std::string human;
    json terms = json::array();
    for (const WaringTerm& t : dec.terms) {
      human += "(" + complex_str(t.scale) + ") * [(" + complex_str(t.a) +
               ")*x + (" + complex_str(t.b) + ")*y]^" + std::to_string(f.degree) +
               "\n";
      terms.push_back(json{{"c", {float_str(t.scale.re), float_str(t.scale.im)}},
                           {"a", {float_str(t.a.re), float_str(t.a.im)}},
                           {"b", {float_str(t.b.re), float_str(t.b.im)}}});
    }
    std::string res = float_str(dec.residual);
    human += "residual = " + res + "  (precision " + std::to_string(precision) +
             " bits)\n";
    emit(json{{"terms", terms},
              {"precision_bits", precision},
              {"residual", res}},
         human, as_json, *os);
  } else if (real_cmd->parsed()) {
    BinaryForm f = parse_form(expr);
    RealRankReport rep = real_rank(f);
    json obj;
    std::string human;
    if (rep.kind == RealRankKind::exact) {
      const char* why = rep.reason == RealRankReason::dth_power ? "dth_power"
                        : rep.reason == RealRankReason::splits_over_R
                            ? "splits_over_R"
                            : "trivial_degree";
      human = "real rank = " + std::to_string(rep.value) + "  (" + why + ")\n";
      obj = json{{"kind", "exact"}, {"value", rep.value}, {"reason", why}};
    } else {
      human = "real rank in [" + std::to_string(rep.lower) + ", " +
              std::to_string(rep.upper) + "]  (no exact method applies)\n";
      obj = json{{"kind", "bounds"},
                 {"lower", rep.lower},
                 {"upper", rep.upper},
                 {"reason", "bounds_only"}};
    }
    if (count_terms(f) == 2) {
      RealBinomialClass cls = real_binomial_class(normalize_binomial(f));
      const char* k = cls.kind == RealBinomialClassKind::odd_alpha ? "odd_alpha"
                      : cls.kind == RealBinomialClassKind::plus    ? "plus"
                                                                   : "minus";
      human += std::string("binomial sign class: ") + k + "  (r=" +
               std::to_string(cls.r) + ", s=" + std::to_string(cls.s) +
               ", alpha=" + std::to_string(cls.alpha) + ")\n";
      obj["binomial_class"] =
          json{{"class", k}, {"r", cls.r}, {"s", cls.s}, {"alpha", cls.alpha}};
    }
    emit(obj, human, as_json, *os);
  } else if (bin_cmd->parsed()) {
    BinomialShape sh = make_shape(opt_r, opt_s, opt_alpha, 1, 1);
    RankCertificate cert = binomial_rank(sh);
    std::string human = "rank = " + std::to_string(cert.rank) + "  (r=" +
                        std::to_string(sh.r) + ", s=" + std::to_string(sh.s) +
                        ", alpha=" + std::to_string(sh.alpha) + ", delta=" +
                        std::to_string(sh.delta) + ", q=" + std::to_string(sh.q) +
                        ", j=" + std::to_string(sh.j) + ")\n";
    json obj = certificate_json(cert);
    obj["shape"] = json{{"r", sh.r},         {"s", sh.s}, {"alpha", sh.alpha},
                        {"delta", sh.delta}, {"q", sh.q}, {"j", sh.j}};
    emit(obj, human, as_json, *os);
  } else if (table_cmd->parsed()) {
    std::vector<TableRow> rows;
    for (int r = 0; r <= max_r; ++r)
      for (int s = std::max(r, 0); s <= max_s; ++s)
        for (int al = 1; al <= max_alpha; ++al) {
          BinomialShape sh = make_shape(r, s, al, 1, 1);
          TableRow row{r, s, al, sh.delta, sh.q, sh.j, binomial_rank(sh).rank, false};
          if (do_verify) {
            if (waring_rank(expand_binomial(sh)).rank != row.rank)
              throw SearchFailedError("table verification failed at r=" +
                                      std::to_string(r) + " s=" + std::to_string(s) +
                                      " alpha=" + std::to_string(al));
            row.verified = true;
          }
          rows.push_back(row);
        }
    if (as_json) {
      json arr = json::array();
      for (const TableRow& row : rows) {
        json o{{"r", row.r},         {"s", row.s}, {"alpha", row.alpha},
               {"delta", row.delta}, {"q", row.q}, {"j", row.j},
               {"rank", row.rank}};
        if (do_verify) o["verified"] = row.verified;
        arr.push_back(o);
      }
      *os << arr.dump(2) << "\n";
    } else {
      *os << "r,s,alpha,delta,q,j,rank" << (do_verify ? ",verified" : "") << "\n";
      for (const TableRow& row : rows) {
        *os << row.r << "," << row.s << "," << row.alpha << "," << row.delta
            << "," << row.q << "," << row.j << "," << row.rank;
        if (do_verify) *os << "," << (row.verified ? "true" : "false");
        *os << "\n";
      }
    }
  }
  return 0;
}

json error_json(const std::string& kind, const std::string& what) {
  return json{{"error", {{"kind", kind}, {"message", what}}}};
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << error_json("parse", e.what()).dump() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << error_json("domain", e.what()).dump() << "\n";
    return 3;
  } catch (const SearchFailedError& e) {
    std::cerr << error_json("search_failed", e.what()).dump() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << error_json("internal", e.what()).dump() << "\n";
    return 1;
  }
}
