#include <doctest.h>

#include <cmath>
#include <random>

#include "fermipair/fermi_gas.hpp"
#include "fermipair/measures.hpp"
#include "fermipair/spin_state.hpp"

using namespace fermipair;

TEST_CASE("concurrence_closed") {
  CHECK(concurrence_closed(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(concurrence_closed(0.5) == 0.0);
  CHECK(concurrence_closed(0.3) == 0.0);
  CHECK(concurrence_closed(0.75) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK_THROWS_AS(concurrence_closed(1.2), std::domain_error);
}

TEST_CASE("entanglement_of_formation") {
  CHECK(entanglement_of_formation(0.0) == 0.0);
  CHECK(entanglement_of_formation(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  // h(0.9)
  CHECK(entanglement_of_formation(0.6) ==
        doctest::Approx(0.46899559358928122125).epsilon(1e-12));
  CHECK_THROWS_AS(entanglement_of_formation(-0.5), std::domain_error);
}

TEST_CASE("relative_entropy_entanglement") {
  CHECK(relative_entropy_entanglement(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(relative_entropy_entanglement(0.5) == 0.0);
  CHECK(relative_entropy_entanglement(0.5 + 1e-12) ==
        doctest::Approx(0.0).epsilon(1e-10));
  CHECK(relative_entropy_entanglement(0.3) == 0.0);
  CHECK(relative_entropy_entanglement(0.75) ==
        doctest::Approx(0.18872187554086713609).epsilon(1e-13));
  CHECK_THROWS_AS(relative_entropy_entanglement(0.1), std::domain_error);
}

TEST_CASE("mutual_information") {
  CHECK(mutual_information(0.25) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(mutual_information(1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(mutual_information(0.5) ==
        doctest::Approx(0.20751874963942190927).epsilon(1e-13));
  CHECK(mutual_information(0.625) ==
        doctest::Approx(0.45120505930460146742).epsilon(1e-13));
}

TEST_CASE("a wrong log base would trip the entropy oracle") {
  const double fidelity = 0.625;
  const double natural_log_variant =
      2.0 + fidelity * std::log(fidelity) +
      (1.0 - fidelity) * std::log((1.0 - fidelity) / 3.0);
  const double via_entropy =
      2.0 - von_neumann_entropy(density_matrix(werner_from_f2(2.0 / 3.0)));
  CHECK(std::abs(mutual_information(fidelity) - via_entropy) <= 1e-10);
  CHECK(std::abs(natural_log_variant - via_entropy) > 1e-2);
}

TEST_CASE("classical_correlation branches") {
  CHECK(classical_correlation(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(classical_correlation(0.75) ==
        doctest::Approx(0.60375937481971095464).epsilon(1e-13));
  // below the E_RE threshold everything is classical
  for (double fidelity : {0.3, 0.4, 0.5}) {
    CHECK(classical_correlation(fidelity) == mutual_information(fidelity));
  }
  // above it, the published branch form 1 - (1-F) log2 3
  for (double fidelity : {0.6, 0.75, 0.9, 1.0}) {
    CHECK(classical_correlation(fidelity) ==
          doctest::Approx(1.0 - (1.0 - fidelity) * std::log2(3.0))
              .epsilon(1e-12));
  }
}

TEST_CASE("pair_distributions") {
  CHECK(pair_distributions(1.0) == std::pair{0.0, 0.5});
  CHECK(pair_distributions(0.0) == std::pair{0.5, 0.5});
  CHECK(pair_distributions(0.5) == std::pair{0.25, 0.5});
}

TEST_CASE("classify thresholds") {
  CHECK(classify(0.9).entangled);
  CHECK(classify(0.9).bell_violating);
  CHECK(classify(0.6).entangled);
  CHECK_FALSE(classify(0.6).bell_violating);
  CHECK_FALSE(classify(0.3).entangled);
  CHECK_FALSE(classify(0.3).bell_violating);
  // p = f^2/(2 - f^2) crosses 1/sqrt(2) at f^2 = 2(sqrt(2) - 1)
  CHECK_FALSE(classify(kBellThresholdF2 - 1e-9).bell_violating);
  CHECK(classify(kBellThresholdF2 + 1e-9).bell_violating);
  const double p_at_threshold = kBellThresholdF2 / (2.0 - kBellThresholdF2);
  CHECK(p_at_threshold == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("measure_set endpoints") {
  const MeasureSet mixed = measure_set(0.0);
  CHECK(mixed.concurrence == 0.0);
  CHECK(mixed.eof == 0.0);
  CHECK(mixed.e_re == 0.0);
  CHECK(mixed.mutual_info == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(mixed.g_parallel == 0.5);
  CHECK(mixed.g_antiparallel == 0.5);
  CHECK_FALSE(mixed.entangled);

  const MeasureSet singlet = measure_set(1.0);
  CHECK(singlet.concurrence == doctest::Approx(1.0));
  CHECK(singlet.eof == doctest::Approx(1.0));
  CHECK(singlet.e_re == doctest::Approx(1.0));
  CHECK(singlet.mutual_info == doctest::Approx(2.0));
  CHECK(singlet.classical_corr == doctest::Approx(1.0));
  CHECK(singlet.g_parallel == 0.0);
  CHECK(singlet.entangled);
  CHECK(singlet.bell_violating);
}

TEST_CASE("measure_set at the contact value of the zero-T gas") {
  // f(1, 0) = 3(sin 1 - cos 1) = 0.903506..., squared 0.816323...
  const double f = f_zero_t(1.0, Dimension::Three).f;
  const MeasureSet ms = measure_set(f * f);
  CHECK(ms.f2 == doctest::Approx(0.81632315856886474144).epsilon(1e-13));
  CHECK(ms.concurrence == doctest::Approx(0.53447553841876528986).epsilon(1e-12));
  CHECK(ms.fidelity == doctest::Approx(0.76723776920938264493).epsilon(1e-13));
  CHECK(ms.eof == doctest::Approx(0.39297971086336724363).epsilon(1e-12));
  CHECK(ms.e_re == doctest::Approx(0.21720449865634733809).epsilon(1e-12));
  // the matrix oracle confirms the closed concurrence
  CHECK(wootters_concurrence(density_matrix(werner_from_f2(ms.f2))) ==
        doctest::Approx(ms.concurrence).epsilon(1e-11));
}

TEST_CASE("measures are monotone in f2 and split additively") {
  double prev_c = -1.0, prev_eof = -1.0, prev_ere = -1.0, prev_i = -1.0;
  for (int k = 0; k <= 1000; ++k) {
    const double f2 = k / 1000.0;
    const MeasureSet ms = measure_set(f2);
    CHECK(ms.concurrence >= prev_c);
    CHECK(ms.eof >= prev_eof);
    CHECK(ms.e_re >= prev_ere);
    CHECK(ms.mutual_info >= prev_i);
    CHECK(std::abs(ms.mutual_info - (ms.e_re + ms.classical_corr)) <= 1e-12);
    CHECK(ms.e_re <= ms.mutual_info + 1e-15);
    CHECK((ms.concurrence > 0.0) == ms.entangled);
    prev_c = ms.concurrence;
    prev_eof = ms.eof;
    prev_ere = ms.e_re;
    prev_i = ms.mutual_info;
  }
}

TEST_CASE("concurrence kinks at f2 = 1/2 while E_RE stays smooth") {
  const double h = 1e-6;
  const double c_left = (concurrence_closed(0.5) - concurrence_closed(0.5 - h)) / h;
  const double c_right = (concurrence_closed(0.5 + h) - concurrence_closed(0.5)) / h;
  // dC/d(f^2) = 3/(2 - f^2)^2 jumps from 0 to 4/3
  CHECK(c_left == 0.0);
  CHECK(c_right == doctest::Approx(4.0 / 3.0).epsilon(1e-5));

  auto ere_of_f2 = [](double f2) {
    return relative_entropy_entanglement(werner_from_f2(f2).fidelity);
  };
  const double e_left = (ere_of_f2(0.5) - ere_of_f2(0.5 - h)) / h;
  const double e_right = (ere_of_f2(0.5 + h) - ere_of_f2(0.5)) / h;
  CHECK(std::abs(e_left) == 0.0);
  CHECK(std::abs(e_right) <= 1e-4);
}

TEST_CASE("closed forms agree with the matrix oracles over 200 samples") {
  std::mt19937 rng(2718u);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double f2 = uniform(rng);
    const WernerParams w = werner_from_f2(f2);
    const TwoSpinDensityMatrix rho = density_matrix(w);
    CHECK(std::abs(concurrence_closed(f2) - wootters_concurrence(rho)) <= 1e-10);
    CHECK(std::abs(mutual_information(w.fidelity) -
                   (2.0 - von_neumann_entropy(rho))) <= 1e-10);
    if (std::abs(f2 - 0.5) > 1e-9)
      CHECK(is_entangled_ppt(rho) == (f2 > 0.5));
  }
}
