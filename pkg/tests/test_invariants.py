import sys
import os
import unittest
from fractions import Fraction

# Add the project root to the path so we can import our modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from controllers import invariants_controller, path_algebra_controller
from database import load_fixture
from errors import InvariantViolation, UnsupportedInput
from models.polynomial import IntPolynomial
from utils.parsing import parse_permutation, parse_quiver_text
from tests.test_path_algebra import C_E6, C_PRIME, C_SECOND

# K0 classes of the summands of T for Q' at vertex 3
P_MATRIX = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [1, 0, -1, 1, 0, 1],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
]


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def transpose(a):
    return [list(row) for row in zip(*a)]


class TestPolynomialFormat(unittest.TestCase):

    def test_monic(self):
        self.assertEqual(str(IntPolynomial(coefficients=(1, -1, 0, 1, 0, -1, 1))), "x^6-x^5+x^3-x+1")

    def test_content_factored(self):
        p = IntPolynomial(coefficients=(2, 0, -2, 4, -2, 0, 2))
        self.assertEqual(p.content(), 2)
        self.assertEqual(str(p), "2(x^6-x^4+2x^3-x^2+1)")

    def test_negative_content(self):
        self.assertEqual(str(IntPolynomial(coefficients=(-3, 0, 0, 3))), "-3(x^3-1)")

    def test_constant(self):
        self.assertEqual(str(IntPolynomial(coefficients=(0, 0, 3))), "3")
        self.assertTrue(IntPolynomial(coefficients=(0,)).is_zero())

    def test_linear_term(self):
        self.assertEqual(str(IntPolynomial(coefficients=(1, 1, 0))), "x^2+x")


class TestDeterminantAndAsymmetry(unittest.TestCase):

    def test_single_arrow(self):
        cartan = [[1, 1], [0, 1]]
        self.assertEqual(invariants_controller.determinant(cartan), 1)
        s = invariants_controller.asymmetry(cartan)
        self.assertEqual(s, [[Fraction(0), Fraction(1)], [Fraction(-1), Fraction(1)]])
        self.assertTrue(invariants_controller.is_integral(s))
        self.assertEqual(invariants_controller.char_poly(s), [1, -1, 1])
        self.assertEqual(str(invariants_controller.associated_polynomial(cartan)), "x^2-x+1")

    def test_three_cycle(self):
        cartan = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
        self.assertEqual(invariants_controller.determinant(cartan), 2)
        self.assertEqual(str(invariants_controller.associated_polynomial(cartan)), "2(x^3-1)")

    def test_hereditary_e6(self):
        self.assertEqual(str(invariants_controller.associated_polynomial(C_E6)), "x^6-x^5+x^3-x+1")

    def test_derived_equivalent_pair(self):
        self.assertEqual(
            invariants_controller.associated_polynomial(C_PRIME),
            invariants_controller.associated_polynomial(C_SECOND),
        )

    def test_singular(self):
        with self.assertRaises(InvariantViolation):
            invariants_controller.asymmetry([[1, 1], [1, 1]])

    def test_non_integral_asymmetry(self):
        s = invariants_controller.asymmetry([[2, 1], [0, 1]])
        self.assertFalse(invariants_controller.is_integral(s))

    def test_not_square(self):
        with self.assertRaises(UnsupportedInput):
            invariants_controller.determinant([[1, 0]])

    def test_euler_form_on_projectives(self):
        for i in range(6):
            for j in range(6):
                x = [int(k == i) for k in range(6)]
                y = [int(k == j) for k in range(6)]
                self.assertEqual(invariants_controller.euler_form(C_PRIME, x, y), C_PRIME[j][i])

    def test_printed_e6_polynomials(self):
        for entry in load_fixture("E6")["cartans"]:
            with self.subTest(label=entry["label"]):
                polynomial = invariants_controller.associated_polynomial(entry["cartan"])
                self.assertEqual(str(polynomial), entry["polynomial"])


class TestCartanTransformation(unittest.TestCase):

    def test_k0_matrix_transforms_cartan(self):
        self.assertEqual(matmul(matmul(P_MATRIX, C_PRIME), transpose(P_MATRIX)), C_SECOND)

    def test_permute_matrix(self):
        sigma = parse_permutation("(12)", 2)
        self.assertEqual(invariants_controller.permute_matrix([[1, 1], [0, 1]], sigma), [[1, 0], [1, 1]])

    def test_permutation_matches(self):
        sigma = parse_permutation("(153)(26)", 6)
        moved = invariants_controller.permute_matrix(C_SECOND, sigma)
        matches = list(invariants_controller.cartan_permutation_matches(C_SECOND, moved))
        self.assertIn(sigma, matches)
        for match in matches:
            self.assertEqual(invariants_controller.permute_matrix(C_SECOND, match), moved)

    def test_first_match_is_identity_for_equal_matrices(self):
        match = invariants_controller.cartan_permutation_match(C_PRIME, C_PRIME)
        self.assertTrue(match.is_identity())

    def test_no_match(self):
        self.assertIsNone(invariants_controller.cartan_permutation_match(C_PRIME, C_SECOND))

    def test_cartan_of_mutation_agrees_with_k0_transform(self):
        q = parse_quiver_text("(2,1), (3,2), (1,3), (4,3), (5,4), (6,3)")
        from controllers import quiver_controller
        mutated = quiver_controller.mutate(q, 3)
        self.assertEqual(path_algebra_controller.build_algebra(mutated).cartan, C_SECOND)


if __name__ == "__main__":
    unittest.main()
