from config import EXIT_OK
from controllers import invariants_controller, path_algebra_controller
from models.polynomial import IntPolynomial
from models.run_config import OutputFormat, RunConfig
from routes.common import add_quiver_argument, emit, emit_json, input_quiver


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("invariants", help="determinant, asymmetry and associated polynomial", parents=parents)
    add_quiver_argument(parser)
    parser.set_defaults(handler=handle)


def handle(cfg: RunConfig) -> int:
    cartan = path_algebra_controller.build_algebra(input_quiver(cfg)).cartan
    determinant = invariants_controller.determinant(cartan)
    asymmetry = invariants_controller.asymmetry(cartan)
    integral = invariants_controller.is_integral(asymmetry)
    char_poly = invariants_controller.char_poly(asymmetry)
    polynomial = invariants_controller.associated_polynomial(cartan)
    charpoly_text = (
        str(IntPolynomial(coefficients=tuple(int(c) for c in char_poly)))
        if all(c.denominator == 1 for c in char_poly)
        else " ".join(str(c) for c in char_poly)
    )

    if cfg.fmt == OutputFormat.JSON:
        emit_json({
            "determinant": determinant,
            "asymmetry_integral": integral,
            "asymmetry": asymmetry,
            "char_poly": char_poly,
            "polynomial": str(polynomial),
            "coefficients": list(polynomial.coefficients),
        })
        return EXIT_OK

    emit(f"det: {determinant}")
    emit(f"asymmetry integral: {'yes' if integral else 'no'}")
    emit(f"charpoly: {charpoly_text}")
    emit(f"polynomial: {polynomial}")
    return EXIT_OK
