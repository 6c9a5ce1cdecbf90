#include <doctest.h>

#include "bolkit/construct.hpp"
#include "bolkit/extensions.hpp"
#include "bolkit/gf2.hpp"
#include "bolkit/structure.hpp"

using namespace bolkit;

namespace {

ErrorKind error_of(const std::string& spec) {
  try {
    construct_from_spec(spec);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for '" << spec << "'");
  return ErrorKind::Malformed;
}

}  // namespace

TEST_CASE("specs build the matching tables") {
  CHECK(construct_from_spec("q9 000000000") == gf2::build_q9({}));
  CHECK(construct_from_spec("  q9   101000011 ") == gf2::build_q9(gf2::parse_q9("101000011")));
  CHECK(construct_from_spec("exceptional") == gf2::build_exceptional());
  CHECK(construct_from_spec("named order12") == build_named_example(NamedExample::order12));
  CHECK(construct_from_spec("named order16cyclic") == build_named_example(NamedExample::order16cyclic));
  CHECK(construct_from_spec("named order16elem") == build_named_example(NamedExample::order16elem));
  CHECK(construct_from_spec("named order4n:5") == build_named_example(NamedExample::order4n, {.n = 5}));
  CHECK(construct_from_spec("named commutant:5") == build_named_example(NamedExample::commutant_order, {.k = 5}));
  CHECK(construct_from_spec("named commutant:3:2") == build_named_example(NamedExample::order12));
}

TEST_CASE("semidirect specs") {
  // Aut(Z3) sorted: identity, inversion
  auto q = construct_from_spec("semidirect K=cyclic:3 E=elem2:2 tau=1,1,1,2");
  CHECK(q == build_named_example(NamedExample::order12));
  auto same = construct_from_spec("semidirect tau=1,1,1,2 E=elem2:2 K=cyclic:3");
  CHECK(same == q);
  auto d = construct_from_spec("semidirect K=cyclic:5 E=cyclic:2 tau=1,4");
  CHECK(d.order() == 10);
  CHECK(is_associative(d));
  CHECK(commutant(d).size() == 1);
  CHECK(construct_from_spec("semidirect K=dihedral:3 E=cyclic:1 tau=1") == dihedral_group(3));
}

TEST_CASE("bad specs") {
  CHECK(error_of("") == ErrorKind::BadSpec);
  CHECK(error_of("q10 0") == ErrorKind::BadSpec);
  CHECK(error_of("q9") == ErrorKind::BadSpec);
  CHECK(error_of("q9 0000") == ErrorKind::BadSpec);
  CHECK(error_of("exceptional 1") == ErrorKind::BadSpec);
  CHECK(error_of("named order13") == ErrorKind::BadSpec);
  CHECK(error_of("named order4n:x") == ErrorKind::BadSpec);
  CHECK(error_of("named order4n:2") == ErrorKind::BadParams);
  CHECK(error_of("semidirect K=cyclic:3 E=elem2:2") == ErrorKind::BadSpec);
  CHECK(error_of("semidirect K=cyclic:3 E=elem2:2 tau=1,1,1") == ErrorKind::BadSpec);
  CHECK(error_of("semidirect K=cyclic:3 E=elem2:2 tau=2,1,1,1") == ErrorKind::BadSpec);
  CHECK(error_of("semidirect K=cyclic:3 E=elem2:2 tau=1,1,1,3") == ErrorKind::BadSpec);
  CHECK(error_of("semidirect K=quat:2 E=elem2:2 tau=1,1,1,1") == ErrorKind::BadSpec);
  CHECK(error_of("semidirect K=cyclic:3 E=elem2:2 tau=1,1,1,2 X=1") == ErrorKind::BadSpec);
  CHECK(error_of("semidirect K=cyclic:3 K=cyclic:3 E=elem2:2 tau=1,1,1,2") == ErrorKind::BadSpec);
  CHECK(error_of("semidirect K=cyclic:0 E=elem2:2 tau=1,1,1,2") == ErrorKind::BadSpec);
}
