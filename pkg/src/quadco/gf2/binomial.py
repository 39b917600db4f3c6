"""Binomial coefficients reduced mod 2."""


def binom_mod2(a: int, b: int) -> int:
    """Return C(a, b) mod 2, taken to be 0 unless 0 <= b <= a.

    By Lucas' theorem C(a, b) is odd exactly when every binary digit of b
    is dominated by the corresponding digit of a.
    """
    if a < 0 or b < 0 or b > a:
        return 0
    return 1 if a & b == b else 0
