"""Leading q-expansion coefficients of the catalogued forms, as published."""

# name -> (valuation, coefficients from q^valuation on)
KNOWN_EXPANSIONS = {
    "P2": (0, (1, -8, -40, -32, -104, -48, -160, -64)),
    "Q2": (0, (1, 24, 24, 96, 24, 144, 96, 192)),
    "R2": (0, (1, -80, -400, -2240, -2960, -10080, -11200, -27520)),
    "Delta2": (1, (1, -8, 12, 64, -210, -96)),
    "P3": (0, (1, -6, -18, -42, -42, -36, -126, -48, -90, -150)),
    "Q3": (0, (1, 12, 36, 12, 84, 72, 36, 96, 180, 12)),
    "R3": (1, (1, 9, 27, 73, 126, 243, 344, 585, 729)),
    "S3": (2, (1, 6, 27, 80, 207, 432, 863, 1512)),
    "Delta3": (1, (1, -6, 9, 4, 6, -54, -40)),
    "j": (-1, (1, 744, 196884, 21493760, 864299970, 20245856256)),
    "j2": (-1, (1, 104, 4372, 96256, 1240002, 10698752, 74428120)),
    "j3": (-1, (1, 42, 783, 8672, 65367, 371520, 1741655)),
}


def known_terms(name):
    """The tabulated terms of ``name`` as an {exponent: coefficient} dict."""
    v, coeffs = KNOWN_EXPANSIONS[name]
    return {v + i: c for i, c in enumerate(coeffs)}
