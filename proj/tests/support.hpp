#ifndef NCC_TESTS_SUPPORT_HPP
#define NCC_TESTS_SUPPORT_HPP

#include <random>

#include "ncc/cones.hpp"

namespace ncc::testing {

// sl_2 with e = E12, f = E21, h = diag(1, -1)/2, h0 = (e + f)/2, z = (e - f)/2.
struct Sl2 {
  AlgebraPtr alg = Algebra::parse("sl:2");
  AlgebraElement e = from({0, 1, 0, 0});
  AlgebraElement f = from({0, 0, 1, 0});
  AlgebraElement h = from({0.5, 0, 0, -0.5});
  AlgebraElement h0 = (e + f) * 0.5;
  AlgebraElement z = (e - f) * 0.5;
  StructurePtr structure = make_structure(h);

  AlgebraElement from(std::initializer_list<double> rowmajor) const {
    Matrix m(2, 2);
    auto it = rowmajor.begin();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = *it++;
    return AlgebraElement::from_matrix(alg, m);
  }
};

inline StructurePtr structure(const char* spec, const char* label) {
  return make_structure(euler_element(Algebra::parse(spec), label));
}

inline double uniform(std::mt19937_64& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

inline AlgebraElement random_in(const Subspace& sub, std::mt19937_64& rng, double r = 1.0) {
  Vector c(sub.dim());
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = uniform(rng, -r, r);
  return sub.element(c);
}

inline AlgebraElement random_element(const AlgebraPtr& alg, std::mt19937_64& rng, double r = 1.0) {
  Vector c(alg->dim());
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = uniform(rng, -r, r);
  return AlgebraElement::from_coords(alg, c);
}

}  // namespace ncc::testing

#endif  // NCC_TESTS_SUPPORT_HPP
