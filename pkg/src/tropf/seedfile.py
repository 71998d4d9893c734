"""JSON seed files and the expression syntax used by the command line."""

import json
import re

from .errors import DimensionError, NotAClusterMonomial, ParseError
from .laurent import LaurentPoly, parse_laurent
from .seeds import RootConfig, check_word


def _locate(text, key):
    """(line, column) of the first occurrence of ``"key"`` in the source text."""
    m = re.search(r'"%s"\s*:' % re.escape(key), text)
    if not m:
        return None, None
    line = text.count("\n", 0, m.start()) + 1
    return line, m.start() - (text.rfind("\n", 0, m.start()) + 1) + 1


def _matrix(data, key, text):
    value = data[key]
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise ParseError(f'"{key}" must be a list of rows', *_locate(text, key))
    for row in value:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise ParseError(f'"{key}" must contain integers only', *_locate(text, key))
    return value


def loads(text):
    """Build a RootConfig from seed-file text.

    Keys: ``B`` (m x n, row-major), optional ``n``/``m`` for cross-checking,
    either ``lambda`` (m x m) or ``lambda0`` with ``S`` (principal coefficients
    are then appended to B), and optional ``names``.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("seed file must hold a JSON object", 1, 1)
    if "B" not in data:
        raise ParseError('missing key "B"', 1, 1)
    known = {"n", "m", "B", "lambda", "lambda0", "S", "names"}
    for key in data:
        if key not in known:
            raise ParseError(f'unknown key "{key}"', *_locate(text, key))
    b = _matrix(data, "B", text)
    names = data.get("names")
    if names is not None and not (isinstance(names, list) and all(isinstance(x, str) for x in names)):
        raise ParseError('"names" must be a list of strings', *_locate(text, "names"))
    if "lambda0" in data or "S" in data:
        if "lambda" in data:
            raise ParseError('give either "lambda" or "lambda0" with "S", not both', *_locate(text, "lambda"))
        if "lambda0" not in data or "S" not in data:
            raise ParseError('"lambda0" and "S" must be given together', *_locate(text, "lambda0" if "lambda0" in data else "S"))
        n = len(b[0]) if b else 0
        root = RootConfig.principal(b[:n], s=data["S"], lambda0=_matrix(data, "lambda0", text), names=names)
        if len(b) not in (n, 2 * n) or (len(b) == 2 * n and tuple(map(tuple, b[n:])) != root.btilde.rows[n:]):
            raise ParseError('with "lambda0" the matrix "B" must be n x n or [B; I_n]', *_locate(text, "B"))
    else:
        lam = _matrix(data, "lambda", text) if "lambda" in data else None
        root = RootConfig(b, lam, names)
    for key, actual in (("n", root.n), ("m", root.m)):
        if key in data and data[key] != actual:
            raise DimensionError(f'"{key}" is {data[key]} but B implies {actual}')
    return root


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def parse_word(text, n):
    """Words are written as ``1 2 1``, ``1,2,1`` or ``ε`` (also empty) for the root."""
    text = (text or "").strip()
    if text in ("", "ε", "e", "()"):
        return ()
    tokens = [t for t in re.split(r"[\s,]+", text.strip("()[]")) if t]
    if not all(re.fullmatch(r"-?\d+", t) for t in tokens):
        raise ParseError(f"cannot read mutation word {text!r}")
    return check_word(tuple(int(t) for t in tokens), n)


def parse_vector(text, length=None):
    tokens = [t for t in re.split(r"[\s,]+", text.strip().strip("()[]")) if t]
    if not all(re.fullmatch(r"-?\d+", t) for t in tokens):
        raise ParseError(f"cannot read integer vector {text!r}")
    vec = tuple(int(t) for t in tokens)
    if length is not None and len(vec) != length:
        raise DimensionError(f"vector {text!r} has {len(vec)} entries, expected {length}")
    return vec


_MONOMIAL_EXPR = re.compile(r"^\s*([^:()]*):\s*(\(.*\))\s*$")


def cluster_monomial(root, word, exps):
    """x_t^v written in root variables; unfrozen exponents must be nonnegative."""
    if len(exps) != root.m:
        raise DimensionError(f"cluster monomial needs {root.m} exponents, got {len(exps)}")
    if any(x < 0 for x in exps[: root.n]):
        raise NotAClusterMonomial(f"unfrozen exponents must be nonnegative, got {exps}")
    out = LaurentPoly.constant(1, root.m)
    for x, e in zip(root.seed_at(word).cluster, exps):
        if e:
            out = out * x**e
    return out


def parse_expression(text, root):
    """``word:(v1,...,vm)`` for the cluster monomial x_t^v, or a Laurent polynomial in root variables."""
    m = _MONOMIAL_EXPR.match(text)
    if m:
        word = parse_word(m.group(1), root.n)
        return cluster_monomial(root, word, parse_vector(m.group(2), root.m))
    return parse_laurent(text, root.m, root.names)
