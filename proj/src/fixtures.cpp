#include "nlomni/fixtures.hpp"

namespace nlomni::fixtures {

NLieAlgebra abelian(int arity, int dim) { return NLieAlgebra(arity, dim); }

NLieAlgebra heisenberg() {
  NLieAlgebra g(2, 3);
  g.set_bracket({0, 1}, unit_vector(3, 2));
  return g;
}

NLieAlgebra sl2() {
  NLieAlgebra g(2, 3);
  g.basis_names = {"h", "e", "f"};
  g.set_bracket({0, 1}, Scalar(2) * unit_vector(3, 1));
  g.set_bracket({0, 2}, Scalar(-2) * unit_vector(3, 2));
  g.set_bracket({1, 2}, unit_vector(3, 0));
  return g;
}

NLieAlgebra fix_b() {
  NLieAlgebra g(3, 4);
  g.set_bracket({0, 1, 2}, unit_vector(4, 3));
  return g;
}

NLieAlgebra fix_c() {
  NLieAlgebra g(3, 4);
  g.set_bracket({0, 1, 2}, unit_vector(4, 3));
  g.set_bracket({0, 1, 3}, Scalar(-1) * unit_vector(4, 2));
  g.set_bracket({0, 2, 3}, unit_vector(4, 1));
  g.set_bracket({1, 2, 3}, Scalar(-1) * unit_vector(4, 0));
  return g;
}

NLieAlgebra fix_c_corrupted() {
  NLieAlgebra g = fix_c();
  g.set_bracket({1, 2, 3}, unit_vector(4, 1) - unit_vector(4, 0));
  return g;
}

NLieAlgebra two_block() {
  NLieAlgebra g(3, 7);
  g.set_bracket({0, 1, 2}, unit_vector(7, 6));
  g.set_bracket({3, 4, 5}, unit_vector(7, 6));
  return g;
}

NLieAlgebra euclidean(int arity) {
  const int dim = arity + 1;
  NLieAlgebra g(arity, dim);
  for (int i = 1; i <= dim; ++i) {
    WedgeIndex args;
    for (int j = 1; j <= dim; ++j) {
      if (j != i) args.push_back(j - 1);
    }
    const Scalar sign = (dim - i) % 2 == 0 ? 1 : -1;
    g.set_bracket(args, sign * unit_vector(dim, i - 1));
  }
  return g;
}

std::vector<Named> corpus() {
  return {
      {"abelian_n2_d3", abelian(2, 3)},
      {"abelian_n3_d4", abelian(3, 4)},
      {"heisenberg", heisenberg()},
      {"sl2", sl2()},
      {"fix_b", fix_b()},
      {"fix_c", fix_c()},
      {"euclidean_n2", euclidean(2)},
      {"euclidean_n3", euclidean(3)},
      {"euclidean_n4", euclidean(4)},
  };
}

}  // namespace nlomni::fixtures
