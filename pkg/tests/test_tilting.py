import sys
import os
import unittest

# Add the project root to the path so we can import our modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from controllers import path_algebra_controller, quiver_controller, tilting_controller
from errors import UnsupportedInput
from models.complexes import VerdictKind
from utils.parsing import parse_quiver_text
from tests.test_path_algebra import C_SECOND, E6_SEED, Q_PRIME, Q_SECOND
from tests.test_invariants import P_MATRIX


class TestMutationComplex(unittest.TestCase):

    def test_summands(self):
        algebra = path_algebra_controller.build_algebra(parse_quiver_text(Q_PRIME))
        candidate = tilting_controller.build_mutation_complex(algebra, 3)
        self.assertEqual(candidate.summand(3).shorthand(), "(3;1,4,6)")
        self.assertEqual(candidate.summand(2).shorthand(), "P2")
        self.assertTrue(candidate.summand(5).is_stalk())
        self.assertEqual(candidate.k0_matrix, P_MATRIX)

    def test_differential_is_the_arrows(self):
        algebra = path_algebra_controller.build_algebra(parse_quiver_text(Q_PRIME))
        t3 = tilting_controller.build_mutation_complex(algebra, 3).summand(3)
        arrows = [algebra.table.class_of((j, 3)) for j in (1, 4, 6)]
        self.assertEqual([component[0] for component in t3.differential], arrows)

    def test_source_rejected(self):
        algebra = path_algebra_controller.build_algebra(parse_quiver_text("(1,2)"))
        with self.assertRaises(UnsupportedInput):
            tilting_controller.build_mutation_complex(algebra, 1)

    def test_vertex_out_of_range(self):
        algebra = path_algebra_controller.build_algebra(parse_quiver_text("(1,2)"))
        with self.assertRaises(UnsupportedInput):
            tilting_controller.build_mutation_complex(algebra, 3)


class TestHomCohomology(unittest.TestCase):

    def test_stalks(self):
        algebra = path_algebra_controller.build_algebra(parse_quiver_text("(1,2)"))
        candidate = tilting_controller.build_mutation_complex(algebra, 2)
        result = tilting_controller.hom_cohomology(algebra.table, candidate.summand(1), candidate.summand(1))
        self.assertEqual(result.dimensions, {-1: 0, 0: 1, 1: 0})

    def test_arrow_is_a_coboundary(self):
        # Hom(T_2, T_1[1]) is spanned by the arrow, which is the differential itself
        algebra = path_algebra_controller.build_algebra(parse_quiver_text("(1,2)"))
        candidate = tilting_controller.build_mutation_complex(algebra, 2)
        result = tilting_controller.hom_cohomology(algebra.table, candidate.summand(2), candidate.summand(1))
        self.assertEqual(result.hom_dimensions[1], 1)
        self.assertEqual(result.dimensions[1], 0)

    def test_endomorphisms_of_the_mutated_summand(self):
        algebra = path_algebra_controller.build_algebra(parse_quiver_text(Q_PRIME))
        candidate = tilting_controller.build_mutation_complex(algebra, 3)
        result = tilting_controller.hom_cohomology(algebra.table, candidate.summand(3), candidate.summand(3))
        self.assertEqual(result.dimensions, {-1: 0, 0: 1, 1: 0})


class TestGoodMutation(unittest.TestCase):

    def test_hereditary_single_arrow(self):
        verdict = tilting_controller.is_good_mutation(parse_quiver_text("(1,2)"), 2)
        self.assertTrue(verdict.is_good)
        self.assertEqual(verdict.mutated.arrows(), [(2, 1)])
        self.assertEqual(verdict.endomorphism_cartan, [[1, 0], [1, 1]])
        self.assertEqual(verdict.endomorphism_quiver.arrows(), [(2, 1)])
        self.assertTrue(verdict.permutation.is_identity())

    def test_worked_example(self):
        q = parse_quiver_text(Q_PRIME)
        verdict = tilting_controller.is_good_mutation(q, 3)
        self.assertEqual(verdict.kind, VerdictKind.GOOD)
        self.assertEqual(verdict.shorthand, "(3;1,4,6)")
        self.assertEqual(verdict.mutated, parse_quiver_text(Q_SECOND))
        self.assertEqual(verdict.endomorphism_cartan, C_SECOND)
        self.assertTrue(quiver_controller.is_isomorphic(verdict.endomorphism_quiver, verdict.mutated))
        self.assertEqual(
            quiver_controller.relabel(verdict.mutated, verdict.permutation),
            verdict.endomorphism_quiver,
        )

    def test_tilting_report(self):
        algebra = path_algebra_controller.build_algebra(parse_quiver_text(Q_PRIME))
        candidate = tilting_controller.build_mutation_complex(algebra, 3)
        report = tilting_controller.is_tilting(candidate)
        self.assertTrue(report.tilting)
        self.assertEqual(report.failing, [])
        # only pairs involving T_3 are computed
        self.assertEqual(len(report.cohomology), 2 * 6 - 1)

    def test_happel_formula_holds(self):
        algebra = path_algebra_controller.build_algebra(parse_quiver_text(Q_PRIME))
        candidate = tilting_controller.build_mutation_complex(algebra, 3)
        self.assertEqual(tilting_controller.happel_check(candidate), [])

    def test_endomorphism_cartan_cross_check(self):
        algebra = path_algebra_controller.build_algebra(parse_quiver_text(Q_PRIME))
        candidate = tilting_controller.build_mutation_complex(algebra, 3)
        report = tilting_controller.is_tilting(candidate)
        cartan = tilting_controller.endomorphism_cartan(candidate, report)
        for (i, j), dimension in report.hom_zero().items():
            self.assertEqual(cartan[j - 1][i - 1], dimension)

    def test_tilting_but_not_cluster_tilted(self):
        # the A3 path mutated at its middle vertex gives the oriented 3-cycle,
        # whose Cartan determinant is 2 while End(T) keeps determinant 1
        verdict = tilting_controller.is_good_mutation(parse_quiver_text("(1,2), (2,3)"), 2)
        self.assertEqual(verdict.kind, VerdictKind.TILTING_BUT_NOT_CLUSTER_TILTED)
        self.assertFalse(verdict.is_good)
        self.assertIsNotNone(verdict.reason)
        self.assertIsNone(verdict.permutation)

    def test_not_tilting(self):
        # 2 -> 1 -> 3 is a zero relation, so the arrow 1 -> 3 survives in Hom(T_3, T_1[-1])
        verdict = tilting_controller.is_good_mutation(parse_quiver_text(Q_PRIME), 1)
        self.assertEqual(verdict.kind, VerdictKind.NOT_TILTING)
        self.assertIn((3, 1, -1), verdict.failing)
        self.assertIsNone(verdict.endomorphism_cartan)

    def test_hereditary_e6_at_a_middle_vertex(self):
        verdict = tilting_controller.is_good_mutation(parse_quiver_text(E6_SEED), 2)
        self.assertEqual(verdict.kind, VerdictKind.TILTING_BUT_NOT_CLUSTER_TILTED)
        self.assertEqual(verdict.mutated, parse_quiver_text(Q_PRIME))

    def test_scan_vertices(self):
        q = parse_quiver_text(Q_PRIME)
        verdicts = tilting_controller.scan_vertices(q)
        self.assertEqual([v.vertex for v in verdicts], [k for k in range(1, 7) if not q.is_source(k)])
        self.assertIn(3, [v.vertex for v in verdicts if v.is_good])

    def test_json_payload(self):
        verdict = tilting_controller.is_good_mutation(parse_quiver_text("(1,2)"), 2)
        data = verdict.to_json_dict()
        self.assertEqual(data["kind"], "good")
        self.assertEqual(data["shorthand"], "(2;1)")
        self.assertEqual(data["permutation"], "(1)")


if __name__ == "__main__":
    unittest.main()
