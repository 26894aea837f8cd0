#pragma once

// The reproduce-paper command: every worked example and closed-form value the
// library is built around, re-run end to end. Prints one line per check and
// reports the failure count.

#include "gaussalg/gaussalg.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace gaussalg_cli {

using namespace gaussalg;

class PaperChecks {
public:
  explicit PaperChecks(std::uint64_t subset_budget) { limits_.subset_budget = subset_budget; }

  int run() {
    borel_order_and_closures();
    gauss_examples();
    veronese_examples();
    graph_examples();
    std::printf("%d/%d checks passed\n", passed_, passed_ + failed_);
    return failed_;
  }

private:
  EnumLimits limits_;
  int passed_ = 0;
  int failed_ = 0;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
      ++passed_;
      std::printf("ok   %s\n", name.c_str());
    } else {
      ++failed_;
      std::printf("FAIL %s%s%s\n", name.c_str(), detail.empty() ? "" : ": ", detail.c_str());
    }
  }

  static Monomial mono(int d, std::vector<int> vars1based) {
    for (int& v : vars1based) --v;
    return Monomial::from_vars(d, vars1based);
  }

  void borel_order_and_closures() {
    const BorelSet closure = BorelSet::closure({mono(4, {1, 3}), mono(4, {2, 4})});
    const MonomialSet listed = canonicalized({mono(4, {1, 1}), mono(4, {1, 2}), mono(4, {1, 3}),
                                              mono(4, {1, 4}), mono(4, {2, 2}), mono(4, {2, 3}),
                                              mono(4, {2, 4})});
    check("borel closure of {x1x3, x2x4} is the seven listed monomials", closure.members() == listed);
    check("x1x3 precedes x2x4 in the Borel order", borel_leq(mono(4, {1, 3}), mono(4, {2, 4})));

    const BorelSet worked = BorelSet::from_stable({mono(4, {1, 1}), mono(4, {1, 2}), mono(4, {2, 2}),
                                                   mono(4, {1, 3}), mono(4, {2, 3}), mono(4, {1, 4})});
    check("worked example has Borel generators {x2x3, x1x4}",
          borel_generators(worked) == canonicalized({mono(4, {2, 3}), mono(4, {1, 4})}));
    check("worked example is not principal", !is_principal(worked));

    const BorelSet veronese3 = BorelSet::closure({mono(3, {3, 3})});
    check("the full Veronese set is principal Borel", is_principal(veronese3));
    check("principal gauss generator of x_d^r is x_d^{(r-1)d}",
          principal_gauss_generator(mono(3, {3, 3}), 3) == Monomial({0, 0, 3}) &&
              principal_gauss_generator(Monomial({0, 0, 0, 2}), 4) == Monomial({0, 0, 0, 4}));
  }

  void gauss_examples() {
    {
      const GaussResult g = gauss_generators(MonomialAlgebra(4, squarefree_veronese(2, 4)), limits_);
      check("gauss of the squarefree 2-Veronese, d=4: the 12 predicted monomials",
            g.gens == expected_gauss_squarefree2(4) && g.gens.size() == 12);
    }
    {
      const GaussResult g = gauss_generators(MonomialAlgebra(5, squarefree_veronese(2, 5)), limits_);
      check("gauss of the squarefree 2-Veronese, d=5: all 81 predicted monomials",
            g.gens == expected_gauss_squarefree2(5) && g.gens.size() == 81);
      const RelationReport rep = relation_report(g.gens);
      check("d=5 gauss set: embedding dimension 81, relation rank 76",
            rep.edim == 81 && rep.kernel_rank == 76 && rep.dim == 5);
      check("d=5 gauss map is birational", is_birational(MonomialAlgebra(5, squarefree_veronese(2, 5)), g.gens));
    }
    {
      const GaussResult g = gauss_generators(MonomialAlgebra(6, squarefree_veronese(2, 6)), limits_);
      check("gauss of the squarefree 2-Veronese, d=6: the full support->=3 family",
            g.gens == mon_min_support(3, 6, 6));
    }
    {
      const MonomialAlgebra v2(2, {Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 2})});
      const GaussResult g = gauss_generators(v2, limits_);
      check("gauss of K[x^2,xy,y^2] is the 2-Veronese again",
            g.gens == canonicalized({Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 2})}));
    }
    {
      const MonomialAlgebra worked(4, {mono(4, {1, 1}), mono(4, {1, 2}), mono(4, {2, 2}),
                                       mono(4, {1, 3}), mono(4, {2, 3}), mono(4, {1, 4})});
      const GaussResult g = gauss_generators(worked, limits_);
      const MonomialSet want = canonicalized({Monomial({4, 0, 0, 0}), Monomial({3, 1, 0, 0}),
                                              Monomial({2, 2, 0, 0}), Monomial({1, 3, 0, 0}),
                                              Monomial({3, 0, 1, 0}), Monomial({2, 1, 1, 0}),
                                              Monomial({1, 2, 1, 0})});
      check("gauss of the worked Borel example: the seven listed generators", g.gens == want);
      check("its single Borel generator is x1x2^2x3",
            borel_generators(BorelSet::from_stable(g.gens)) == MonomialSet{Monomial({1, 2, 1, 0})});
      check("the gauss set of a Borel-fixed algebra is strongly stable", is_strongly_stable(g.gens));
    }
    {
      const MonomialAlgebra curve(2, {Monomial({6, 0}), Monomial({5, 1}), Monomial({4, 2}),
                                      Monomial({3, 3}), Monomial({0, 6})});
      const NormalityProbe probe = normality_probe(curve, 2);
      check("the monomial curve K[s^6,s^5t,s^4t^2,s^3t^3,t^6] is not normal",
            !probe.clean && probe.gap_level == 1 && probe.gap_point == std::vector<int>{2, 4});
      MonomialSet v8;
      for (int i = 0; i <= 8; ++i) v8.push_back(Monomial({8 - i, i}));
      check("its gauss algebra, the 8-Veronese, probes clean to level 3",
            normality_probe(MonomialAlgebra(2, v8), 3).clean);
    }
    {
      // Borel-fixed with dim G(A) = d: closure of x2x4
      const MonomialAlgebra a(4, BorelSet::closure({mono(4, {2, 4})}).members());
      const GaussResult g = gauss_generators(a, limits_);
      const bool full = rank_of_columns(log_matrix_of(g.gens)) == 4;
      check("Borel-fixed algebra with full gauss dimension is birational", full && is_birational(a, g.gens));
    }
  }

  void veronese_examples() {
    check("|Mon_S(3,4)| = 13 and |Mon_S(3,5)| = 81",
          mon_min_support(3, 4, 4).size() == 13 && mon_min_support(3, 5, 5).size() == 81);
    check("Mon_S(3,4) is polymatroidal", !polymatroid_exchange_check(mon_min_support(3, 4, 4)).has_value());
    check("the punctured d=4 family fails the exchange property",
          polymatroid_exchange_check(expected_gauss_squarefree2(4)).has_value());
    check("predicted embedding dimensions e-1 = 12 (d=4) and e = 81 (d=5)",
          expected_gauss_squarefree2(4).size() == 12 && expected_gauss_squarefree2(5).size() == 81);
  }

  void graph_examples() {
    check("triangle incidence is non-singular (odd cycle)",
          odd_cycle_every_component(LoopedGraph::make(3, {{0, 1}, {1, 2}, {0, 2}})));
    check("4-cycle incidence is singular (bipartite)", !odd_cycle_every_component(cycle_graph(4)));
    check("two disjoint triangles: odd cycle in every component",
          odd_cycle_every_component(LoopedGraph::make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));

    check("edge ring of the 4-cycle has dimension d-1 = 3",
          algebra_dimension(edge_ring(cycle_graph(4))) == 3);
    check("one loop restores dimension d = 4", algebra_dimension(edge_ring(cycle_graph(4, {0}))) == 4);

    {
      const MonomialSet gens = gauss_from_forests(complete_bipartite(2, 2, {0}));
      const MonomialSet want = canonicalized({Monomial({3, 0, 1, 0}), Monomial({3, 0, 0, 1}),
                                              Monomial({2, 1, 1, 0}), Monomial({2, 1, 0, 1})});
      check("K_{2,2} with one loop: the four generators x1^2 x_i y_j", gens == want);
      check("K_{2,2} complexity 4 = n^{m-1} m^{n-1}", spanning_tree_count(complete_bipartite(2, 2)) == 4);
      check("K_{2,2}, root x1: four rooted spanning trees",
            rooted_spanning_forests(complete_bipartite(2, 2, {0}), {0}).size() == 4);
    }
    for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
      const MonomialSet gens = gauss_from_forests(complete_bipartite(n, m, {0}));
      // x1^2 * (x-part)^{m-1} * (y-part)^{n-1}
      MonomialSet want;
      for (const Monomial& xs : all_degree_monomials(n, m - 1))
        for (const Monomial& ys : all_degree_monomials(m, n - 1)) {
          std::vector<int> e(static_cast<std::size_t>(n + m), 0);
          e[0] = 2;
          for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] += xs.exponent(i);
          for (int j = 0; j < m; ++j) e[static_cast<std::size_t>(n + j)] += ys.exponent(j);
          want.emplace_back(std::move(e));
        }
      want = canonicalized(std::move(want));
      check("K_{" + std::to_string(n) + "," + std::to_string(m) + "} generators match x1^2(x)^{m-1}(y)^{n-1}",
            gens == want);
    }
    {
      const MonomialSet gens = gauss_from_forests(path_graph(3, {0, 2}));
      check("path with loops at both ends: j-i+2 = 4 generators",
            gens.size() == 4 && relation_report(gens).kernel_rank == 1);
    }
    {
      const MonomialSet g4 = gauss_from_forests(cycle_graph(4, {0}));
      check("even 4-cycle with loop: the four displayed generators",
            g4 == canonicalized({Monomial({2, 0, 1, 1}), Monomial({2, 1, 1, 0}), Monomial({3, 0, 0, 1}),
                                 Monomial({3, 1, 0, 0})}));
      const RelationReport r4 = relation_report(g4);
      check("even 4-cycle with loop: hypersurface of dimension 3",
            g4.size() == 4 && r4.dim == 3 && r4.kernel_rank == 1);
      const MonomialSet g6 = gauss_from_forests(cycle_graph(6, {0}));
      const RelationReport r6 = relation_report(g6);
      check("even 6-cycle with loop: hypersurface of dimension 5",
            g6.size() == 6 && r6.dim == 5 && r6.kernel_rank == 1);
      const RelationReport r5 = relation_report(gauss_generators(edge_ring(cycle_graph(5, {0})), limits_).gens);
      check("odd 5-cycle with loop: hypersurface of dimension 5", r5.dim == 5 && r5.kernel_rank == 1);
    }
    {
      bool rejected = false;
      try {
        nonbipartite_gauss_supports(cycle_graph(4));
      } catch (const input_error&) {
        rejected = true;
      }
      check("odd-cycle support search rejects bipartite input", rejected);
    }
    {
      bool ok = true;
      const long long expect[] = {1, 3, 8, 21, 55, 144, 377};
      for (int d = 1; d <= 7; ++d) ok = ok && path_lambda(d) == expect[d - 1];
      check("lambda_d = 1, 3, 8, 21, 55, 144, 377", ok);
    }
  }
};

inline int run_reproduce_paper(std::uint64_t subset_budget) { return PaperChecks(subset_budget).run(); }

} // namespace gaussalg_cli
