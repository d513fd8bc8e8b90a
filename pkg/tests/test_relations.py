import sys
import os
import unittest

# Add the project root to the path so we can import our modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from controllers import relations_controller
from errors import InvariantViolation, UnsupportedInput
from models.quiver import Quiver
from utils.parsing import parse_permutation, parse_quiver_text

Q_PRIME = "(2,1), (3,2), (1,3), (4,3), (5,4), (6,3)"
Q_SECOND = "(2,3), (3,1), (3,4), (3,6), (4,2), (6,2), (5,4)"


class TestShortestPaths(unittest.TestCase):

    def test_three_cycle(self):
        q = parse_quiver_text("(1,2), (2,3), (3,1)")
        self.assertEqual(relations_controller.shortest_paths(q, 1, 2), [(2, 3, 1)])

    def test_two_paths(self):
        q = parse_quiver_text(Q_SECOND)
        self.assertEqual(relations_controller.shortest_paths(q, 2, 3), [(3, 4, 2), (3, 6, 2)])

    def test_no_path_on_tree_arrow(self):
        q = parse_quiver_text(Q_SECOND)
        self.assertEqual(relations_controller.shortest_paths(q, 5, 4), [])

    def test_chord_blocks_longer_path(self):
        # 1 -> 3 is a chord of the 4-cycle, so 1 -> 2 closes no full cycle
        q = parse_quiver_text("(1,2), (2,3), (3,4), (4,1), (1,3)")
        self.assertEqual(relations_controller.shortest_paths(q, 1, 2), [])
        self.assertEqual(relations_controller.shortest_paths(q, 1, 3), [(3, 4, 1)])

    def test_not_an_arrow(self):
        with self.assertRaises(UnsupportedInput):
            relations_controller.shortest_paths(parse_quiver_text("(1,2)"), 2, 1)


class TestSynthesize(unittest.TestCase):

    def test_tree_has_no_relations(self):
        self.assertTrue(relations_controller.synthesize(parse_quiver_text("(1,2), (2,3), (4,3)")).is_empty())

    def test_three_cycle(self):
        relations = relations_controller.synthesize(parse_quiver_text("(1,2), (2,3), (3,1)"))
        self.assertEqual(relations.zero_paths(), [(1, 2, 3), (2, 3, 1), (3, 1, 2)])
        self.assertEqual(relations.comm_pairs(), [])

    def test_q_prime(self):
        relations = relations_controller.synthesize(parse_quiver_text(Q_PRIME))
        self.assertEqual(relations.zero_paths(), [(1, 3, 2), (2, 1, 3), (3, 2, 1)])
        self.assertEqual(relations.comm_pairs(), [])

    def test_q_second(self):
        relations = relations_controller.synthesize(parse_quiver_text(Q_SECOND))
        self.assertEqual(relations.zero_paths(), [(2, 3, 4), (2, 3, 6), (4, 2, 3), (6, 2, 3)])
        self.assertEqual(relations.comm_pairs(), [((3, 4, 2), (3, 6, 2))])
        self.assertIn("comm: 3->4->2 = 3->6->2", relations.to_lines())
        self.assertIn("zero: 2->3->4", relations.to_lines())

    def test_relabel(self):
        relations = relations_controller.synthesize(parse_quiver_text("(1,2), (2,3), (3,1)"))
        moved = relations.relabel(parse_permutation("(12)", 3))
        self.assertEqual(sorted(moved.zero_paths()), [(1, 3, 2), (2, 1, 3), (3, 2, 1)])

    def test_multiple_arrows_rejected(self):
        with self.assertRaises(UnsupportedInput):
            relations_controller.synthesize(Quiver.from_arrows([(1, 2), (1, 2)]))

    def test_three_shortest_paths_rejected(self):
        # arrow 5 -> 1 closed by three parallel paths of length 2
        q = parse_quiver_text("(1,2), (1,3), (1,4), (2,5), (3,5), (4,5), (5,1)")
        with self.assertRaises(InvariantViolation):
            relations_controller.synthesize(q)


if __name__ == "__main__":
    unittest.main()
