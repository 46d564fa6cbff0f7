#include <cmath>
#include <cstring>
#include <string>

#include <doctest.h>

#include "dkposc.h"

TEST_CASE("model lifecycle and field access") {
  dkposc_model* m = dkposc_model_create();
  REQUIRE(m != nullptr);

  double v = 0.0;
  CHECK(dkposc_model_get(m, "M", &v) == DKPOSC_OK);
  CHECK(v == 1.0);
  CHECK(dkposc_model_get(m, "A", &v) == DKPOSC_OK);
  CHECK(v == 0.0);

  CHECK(dkposc_model_set(m, "A", 1.5) == DKPOSC_OK);
  CHECK(dkposc_model_get(m, "A", &v) == DKPOSC_OK);
  CHECK(v == 1.5);

  CHECK(dkposc_model_set(m, "tension", 1.0) == DKPOSC_BAD_FIELD);
  CHECK(std::string(dkposc_last_error()).find("tension") !=
        std::string::npos);
  CHECK(dkposc_model_get(m, "tension", &v) == DKPOSC_BAD_FIELD);

  CHECK(dkposc_model_set(nullptr, "A", 1.0) == DKPOSC_BAD_HANDLE);
  CHECK(dkposc_solution_count(nullptr) == -1);

  dkposc_model_destroy(m);
  dkposc_model_destroy(nullptr);  // must be a no-op
}

TEST_CASE("solve through the flat interface") {
  dkposc_model* m = dkposc_model_create();
  REQUIRE(m != nullptr);
  dkposc_model_set(m, "A", 1.0);
  dkposc_model_set(m, "k", 1.0);
  dkposc_model_set_quantum(m, 0, 1);

  dkposc_solution* sol = nullptr;
  REQUIRE(dkposc_solve(m, &sol) == DKPOSC_OK);
  REQUIRE(sol != nullptr);
  REQUIRE(dkposc_solution_count(sol) == 2);

  double E = 0.0, residual = 1.0;
  int branch = 0, flagged = 1;
  CHECK(dkposc_solution_root(sol, 1, &E, &residual, &branch, &flagged) ==
        DKPOSC_OK);
  CHECK(std::fabs(E - 2.0) < 1e-12);
  CHECK(branch == 1);
  CHECK(flagged == 0);
  CHECK(residual < 1e-10);

  CHECK(dkposc_solution_root(sol, 0, &E, nullptr, nullptr, nullptr) ==
        DKPOSC_OK);
  CHECK(std::fabs(E + 2.0) < 1e-12);

  CHECK(dkposc_solution_root(sol, 7, &E, nullptr, nullptr, nullptr) ==
        DKPOSC_INVALID_PARAMETER);

  dkposc_solution_destroy(sol);
  dkposc_model_destroy(m);
}

TEST_CASE("invalid parameters surface as status plus message") {
  dkposc_model* m = dkposc_model_create();
  REQUIRE(m != nullptr);
  dkposc_model_set(m, "alpha", 0.0);
  dkposc_model_set(m, "A", 1.0);

  dkposc_solution* sol = nullptr;
  CHECK(dkposc_solve(m, &sol) == DKPOSC_INVALID_PARAMETER);
  CHECK(sol == nullptr);
  CHECK(std::string(dkposc_last_error()).find("alpha") != std::string::npos);
  dkposc_model_destroy(m);
}

TEST_CASE("wavefunction and residual evaluation") {
  dkposc_model* m = dkposc_model_create();
  REQUIRE(m != nullptr);
  dkposc_model_set(m, "A", 1.0);
  dkposc_model_set(m, "k", 1.0);
  dkposc_model_set_quantum(m, 0, 1);

  double g = 1.0;
  CHECK(dkposc_quantization_residual(m, 2.0, &g) == DKPOSC_OK);
  CHECK(std::fabs(g) < 1e-12);

  double phi1 = -1.0, dphi1 = 0.0, jt = 0.0;
  CHECK(dkposc_wavefunction_eval(m, 2.0, 0.0, &phi1, nullptr, &jt) ==
        DKPOSC_OK);
  CHECK(phi1 == 0.0);
  CHECK(jt == 0.0);
  CHECK(dkposc_wavefunction_eval(m, 2.0, 0.8, &phi1, &dphi1, &jt) ==
        DKPOSC_OK);
  CHECK(phi1 > 0.0);
  CHECK(jt > 0.0);  // 4 |phi1|^2 in this static configuration
  CHECK(jt == doctest::Approx(4.0 * phi1 * phi1).epsilon(1e-12));

  double rmax = 0.0;
  CHECK(dkposc_wavefunction_extent(m, 2.0, &rmax) == DKPOSC_OK);
  CHECK(rmax == doctest::Approx(3.0 * std::sqrt(3.0)).epsilon(1e-12));

  dkposc_model_destroy(m);
}

TEST_CASE("oracle and version strings") {
  dkposc_model* m = dkposc_model_create();
  REQUIRE(m != nullptr);
  dkposc_model_set(m, "A", 1.0);
  dkposc_model_set(m, "k", 1.0);
  dkposc_model_set_quantum(m, 0, 1);

  double E = 0.0;
  CHECK(dkposc_oracle_energy(m, 2.0, 4001, &E) == DKPOSC_OK);
  CHECK(std::fabs(E - 2.0) < 1e-5);

  CHECK(dkposc_oracle_energy(m, 3.0, 2001, &E) ==
        DKPOSC_ORACLE_DISAGREEMENT);
  CHECK(std::strlen(dkposc_last_error()) > 0);

  CHECK(dkposc_version() != nullptr);
  CHECK(dkposc_last_error() != nullptr);
  dkposc_model_destroy(m);
}
