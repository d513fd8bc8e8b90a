import sys
import os
import unittest

# Add the project root to the path so we can import our modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from controllers import mutation_class_controller, quiver_controller
from errors import CapExceeded, UnsupportedInput
from utils.parsing import parse_quiver_text

FULL_SUITE = bool(os.getenv("CTILT_FULL_SUITE"))


class TestDynkinTypes(unittest.TestCase):

    def test_normalize(self):
        self.assertEqual(mutation_class_controller.normalize_type("e_6"), "E6")
        self.assertEqual(mutation_class_controller.normalize_type("A_{4}"), "A4")

    def test_unsupported(self):
        for tag in ["E9", "D3", "B3", "", "E"]:
            with self.assertRaises(UnsupportedInput):
                mutation_class_controller.parse_dynkin_type(tag)

    def test_seeds(self):
        self.assertEqual(
            mutation_class_controller.dynkin_seed("E6"),
            parse_quiver_text("(1,2), (2,3), (3,4), (4,5), (3,6)"),
        )
        self.assertEqual(
            mutation_class_controller.dynkin_seed("D4"),
            parse_quiver_text("(1,2), (2,3), (2,4)"),
        )


class TestSmallClasses(unittest.TestCase):

    def test_a3(self):
        cls = mutation_class_controller.dynkin_class("A3")
        self.assertEqual(len(cls), 4)
        self.assertEqual(len(cls.orbits), 2)
        self.assertTrue(mutation_class_controller.is_connected(cls))
        cycle = parse_quiver_text("(1,2), (2,3), (3,1)")
        member = cls.member_id(quiver_controller.canonical_key(cycle))
        self.assertIsNotNone(member)
        self.assertEqual(cls.orbit_of(member).members, [member])

    def test_edges_cover_every_vertex(self):
        cls = mutation_class_controller.dynkin_class("A3")
        self.assertEqual(len(cls.edges), len(cls) * 3)
        for edge in cls.edges:
            mutated = quiver_controller.mutate(cls.members[edge.source], edge.vertex)
            self.assertEqual(cls.keys[edge.target], quiver_controller.canonical_key(mutated))

    def test_custom_seed(self):
        cls = mutation_class_controller.enumerate_class(parse_quiver_text("(2,1), (2,3)"))
        self.assertEqual(len(cls), 4)
        self.assertIsNone(cls.dynkin_type)

    def test_cap(self):
        with self.assertRaises(CapExceeded):
            mutation_class_controller.dynkin_class("E6", cap=10)


class TestExceptionalClasses(unittest.TestCase):

    def test_e6(self):
        cls = mutation_class_controller.dynkin_class("E6")
        self.assertEqual(len(cls), 67)
        self.assertEqual(len(cls.orbits), 21)
        self.assertTrue(mutation_class_controller.is_connected(cls))
        self.assertEqual(sum(len(orbit.members) for orbit in cls.orbits), 67)

    def test_e7(self):
        cls = mutation_class_controller.dynkin_class("E7")
        self.assertEqual(len(cls), 416)
        self.assertEqual(len(cls.orbits), 112)

    @unittest.skipUnless(FULL_SUITE, "set CTILT_FULL_SUITE=1 for E8")
    def test_e8(self):
        cls = mutation_class_controller.dynkin_class("E8")
        self.assertEqual(len(cls), 1574)
        self.assertTrue(mutation_class_controller.is_connected(cls))

    def test_parallel_matches_serial(self):
        serial = mutation_class_controller.enumerate_class(mutation_class_controller.dynkin_seed("A4"))
        parallel = mutation_class_controller.enumerate_class(
            mutation_class_controller.dynkin_seed("A4"), workers=2
        )
        self.assertEqual(serial.keys, parallel.keys)


if __name__ == "__main__":
    unittest.main()
