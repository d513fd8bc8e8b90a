import sys
import os
import unittest

# Add the project root to the path so we can import our modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from controllers import quiver_controller
from errors import InvariantViolation, UnsupportedInput
from models.quiver import Quiver, VertexPermutation
from utils.parsing import parse_permutation, parse_quiver_text

E6_SEED = "(1,2), (2,3), (4,3), (5,4), (6,3)"


class TestMutation(unittest.TestCase):

    def test_mutation_reverses_and_adds_composites(self):
        q = parse_quiver_text("(1,2), (2,3)")
        mutated = quiver_controller.mutate(q, 2)
        self.assertEqual(mutated.arrows(), [(1, 3), (2, 1), (3, 2)])

    def test_composite_cancels_opposing_arrow(self):
        cycle = parse_quiver_text("(1,2), (2,3), (3,1)")
        self.assertEqual(quiver_controller.mutate(cycle, 2).arrows(), [(2, 1), (3, 2)])

    def test_mutation_is_an_involution(self):
        q = parse_quiver_text(E6_SEED)
        for k in range(1, q.n + 1):
            self.assertEqual(quiver_controller.mutate(quiver_controller.mutate(q, k), k), q)

    def test_worked_example_mutations(self):
        q = parse_quiver_text(E6_SEED)
        q1 = quiver_controller.mutate(q, 2)
        self.assertEqual(q1, parse_quiver_text("(2,1), (3,2), (1,3), (4,3), (5,4), (6,3)"))
        q2 = quiver_controller.mutate(q1, 3)
        self.assertEqual(q2, parse_quiver_text("(2,3), (3,1), (3,4), (3,6), (4,2), (6,2), (5,4)"))

    def test_dynkin_mode_rejects_double_arrows(self):
        q = parse_quiver_text("(1,2), (2,3), (1,4), (4,3)")
        self.assertEqual(quiver_controller.mutate(q, 2).max_multiplicity(), 1)
        square = parse_quiver_text("(1,2), (2,3), (3,4), (4,1), (1,3)")
        with self.assertRaises(InvariantViolation):
            quiver_controller.mutate(quiver_controller.mutate(square, 3), 1, dynkin=True)

    def test_vertex_out_of_range(self):
        with self.assertRaises(UnsupportedInput):
            quiver_controller.mutate(parse_quiver_text("(1,2)"), 3)


class TestReflectionAndOpposite(unittest.TestCase):

    def test_opposite(self):
        q = parse_quiver_text("(1,2), (2,3)")
        self.assertEqual(quiver_controller.opposite(q).arrows(), [(2, 1), (3, 2)])

    def test_reflect_at_sink(self):
        q = parse_quiver_text("(1,2), (3,2)")
        self.assertEqual(quiver_controller.reflect(q, 2).arrows(), [(2, 1), (2, 3)])

    def test_reflect_requires_sink_or_source(self):
        with self.assertRaises(UnsupportedInput):
            quiver_controller.reflect(parse_quiver_text("(1,2), (2,3)"), 2)

    def test_sink_source_closure_of_a3_path(self):
        closure = quiver_controller.sink_source_closure(parse_quiver_text("(1,2), (2,3)"))
        self.assertEqual(closure[0], parse_quiver_text("(1,2), (2,3)"))
        # every orientation of the A3 tree
        self.assertEqual(len(closure), 4)


class TestIsomorphism(unittest.TestCase):

    def test_relabel_moves_arrows(self):
        q = parse_quiver_text("(1,2), (2,3)")
        sigma = parse_permutation("(13)", 3)
        self.assertEqual(quiver_controller.relabel(q, sigma).arrows(), [(2, 1), (3, 2)])

    def test_relabel_size_mismatch(self):
        with self.assertRaises(UnsupportedInput):
            quiver_controller.relabel(parse_quiver_text("(1,2)"), VertexPermutation.identity(3))

    def test_canonical_key_is_relabeling_invariant(self):
        q = parse_quiver_text("(2,3), (3,1), (3,4), (3,6), (4,2), (6,2), (5,4)")
        sigma = parse_permutation("(153)(26)", 6)
        moved = quiver_controller.relabel(q, sigma)
        self.assertNotEqual(q, moved)
        self.assertEqual(quiver_controller.canonical_key(q), quiver_controller.canonical_key(moved))

    def test_canonical_key_separates(self):
        path = parse_quiver_text("(1,2), (2,3)")
        sink = parse_quiver_text("(1,2), (3,2)")
        self.assertFalse(quiver_controller.is_isomorphic(path, sink))

    def test_isomorphisms_satisfy_relabeling(self):
        q = parse_quiver_text("(2,1), (3,2), (1,3), (4,3), (5,4), (6,3)")
        moved = quiver_controller.relabel(q, parse_permutation("(14)(25)", 6))
        found = quiver_controller.isomorphisms(q, moved)
        self.assertTrue(found)
        for sigma in found:
            self.assertEqual(quiver_controller.relabel(q, sigma), moved)

    def test_automorphisms_of_three_cycle(self):
        cycle = parse_quiver_text("(1,2), (2,3), (3,1)")
        self.assertEqual(len(quiver_controller.isomorphisms(cycle, cycle)), 3)
        self.assertTrue(quiver_controller.isomorphism(cycle, cycle).is_identity())

    def test_permutation_inverse_and_compose(self):
        sigma = parse_permutation("(123)", 3)
        self.assertTrue(sigma.compose(sigma.inverse()).is_identity())
        self.assertEqual(sigma.compose(sigma), parse_permutation("(132)", 3))

    def test_quiver_rejects_two_cycles(self):
        with self.assertRaises(ValueError):
            Quiver(n=2, a=((0, 1), (1, 0)))


if __name__ == "__main__":
    unittest.main()
