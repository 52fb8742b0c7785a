"""Text renderings of a q-series: CSV rows, OEIS b-file lines and JSON."""

import json

FORMATS = ("csv", "json", "bfile")


class FormatError(ValueError):
    pass


def _rows(s):
    """(exponent, coefficient) for every known exponent from the valuation on, zeros included."""
    return [(n, s.coeff(n)) for n in range(s.valuation, s.precision)]


def _number(c):
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def to_csv(s):
    return "".join("%d,%s\n" % (n, _number(c)) for n, c in _rows(s))


def to_bfile(s):
    lines = []
    for n, c in _rows(s):
        if c.denominator != 1:
            raise FormatError("b-files need integer terms; coefficient of q^%d is %s" % (n, c))
        lines.append("%d %d\n" % (n, c.numerator))
    return "".join(lines)


def to_json(s):
    return json.dumps(s.to_json(), sort_keys=True) + "\n"


def render(s, fmt):
    if fmt == "csv":
        return to_csv(s)
    if fmt == "bfile":
        return to_bfile(s)
    if fmt == "json":
        return to_json(s)
    raise FormatError("unknown format %r; choose from %s" % (fmt, ", ".join(FORMATS)))
