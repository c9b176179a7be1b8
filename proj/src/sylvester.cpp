#include "waring/sylvester.hpp"

#include "waring/errors.hpp"

namespace waring {

std::string to_string(RankMethod m) {
  switch (m) {
    case RankMethod::sylvester: return "sylvester";
    case RankMethod::closed_form_binomial: return "closed_form_binomial";
    case RankMethod::monomial: return "monomial";
  }
  return "?";
}

RankCertificate waring_rank(const BinaryForm& f) {
  if (f.is_zero()) throw ZeroFormError();
  if (f.degree < 1) throw DegreeError("waring_rank needs degree >= 1");
  RankCertificate cert;
  cert.degree = f.degree;
  cert.method = RankMethod::sylvester;
  if (f.degree == 1) {
    cert.rank = 1;
    cert.g1_square_free = true;
    return cert;
  }
  ApolarPair pair = apolar_generators(f);
  cert.witness = pair;
  cert.g1_square_free = is_square_free(pair.g1);
  cert.rank = cert.g1_square_free ? pair.d1 : f.degree + 2 - pair.d1;
  return cert;
}

int generic_rank(int d) {
  if (d < 1) throw DegreeError("generic_rank needs degree >= 1");
  return (d + 2) / 2;
}

}  // namespace waring
