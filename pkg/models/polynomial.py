from math import gcd
from typing import Tuple

from pydantic import BaseModel, ConfigDict, field_validator


class IntPolynomial(BaseModel):
    """
    Integer polynomial, coefficients from the leading term down to the constant.

    Printed with the content factored out: 2(x^6-x^4+2x^3-x^2+1).
    """

    coefficients: Tuple[int, ...]

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"coefficients": [3, 0, 0, 3, 0, 0, 3]}}
    )

    @field_validator("coefficients")
    @classmethod
    def strip_leading_zeros(cls, value):
        value = tuple(int(c) for c in value)
        while len(value) > 1 and value[0] == 0:
            value = value[1:]
        return value or (0,)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def content(self) -> int:
        """gcd of the coefficients, signed like the leading coefficient."""
        value = 0
        for c in self.coefficients:
            value = gcd(value, c)
        if value and self.coefficients[0] < 0:
            value = -value
        return value

    def primitive(self) -> "IntPolynomial":
        d = self.content()
        if not d:
            return self
        return IntPolynomial(coefficients=tuple(c // d for c in self.coefficients))

    def _terms(self) -> str:
        parts = []
        for position, c in enumerate(self.coefficients):
            power = self.degree - position
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = "x" if power == 1 else f"x^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}{monomial}"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        return text + "".join(sign + body for sign, body in parts[1:])

    def __str__(self) -> str:
        if self.degree == 0:
            return str(self.coefficients[0])
        d = self.content()
        inner = self.primitive()._terms()
        if d == 1:
            return inner
        if d == -1:
            return f"-({inner})"
        return f"{d}({inner})"
