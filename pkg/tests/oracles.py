"""Independent reference reducers: rewrite any out-of-order adjacent pair in a word.

These share no code with the package kernels beyond scalar arithmetic.
"""
from awcenter.chebyshev import VARS4
from awcenter.coeffring.cyclo import CycloScalar
from awcenter.coeffring.multipoly import MultiPoly

CENTRAL = (("alpha", False), ("beta", False), ("gamma", False))


def _add(out, word, c):
    v = out.get(word)
    v = c if v is None else v + c
    if v:
        out[word] = v
    else:
        out.pop(word, None)


def reduce_words(words: dict, rewrite) -> dict:
    """Normal form of {word: coeff}; rewrite(x, y) gives {replacement word: coeff} or None."""
    done: dict = {}
    todo = dict(words)
    while todo:
        word, c = todo.popitem()
        for pos in range(len(word) - 1):
            rep = rewrite(word[pos], word[pos + 1])
            if rep is not None:
                for mid, r in rep.items():
                    _add(todo, word[:pos] + mid + word[pos + 2:], c * r)
                break
        else:
            _add(done, word, c)
    return done


# Delta ------------------------------------------------------------------------------------

def uaw_rewrite(d):
    q = lambda m: CycloScalar.q_power(d, m)
    one = MultiPoly.constant(CENTRAL, CycloScalar.from_int(d, 1))
    al, be, ga = (MultiPoly.variable(CENTRAL, n) * one for n, _ in CENTRAL)
    rules = {
        ("C", "B"): {("B", "C"): one * q(2), ("A",): one * (q(1) * (q(2) - q(-2))), (): al * -(q(1) * (q(1) - q(-1)))},
        ("C", "A"): {("A", "C"): one * q(-2), ("B",): one * -(q(-1) * (q(2) - q(-2))), (): be * (q(-1) * (q(1) - q(-1)))},
        ("B", "A"): {("A", "B"): one * q(2), ("C",): one * (q(1) * (q(2) - q(-2))), (): ga * -(q(1) * (q(1) - q(-1)))},
    }
    return lambda x, y: rules.get((x, y))


def uaw_reference_product(d, *words):
    """Normal form of a product of generator words as {(i, j, k): MultiPoly in alpha, beta, gamma}."""
    one = MultiPoly.constant(CENTRAL, CycloScalar.from_int(d, 1))
    word = tuple(g for w in words for g in w)
    nf = reduce_words({word: one}, uaw_rewrite(d))
    return {(w.count("A"), w.count("B"), w.count("C")): c for w, c in nf.items()}


# U_q(sl2) -----------------------------------------------------------------------------------

def u_rewrite(d):
    q = lambda m: CycloScalar.q_power(d, m)
    inv = (q(1) - q(-1)).inverse()
    one = CycloScalar.from_int(d, 1)
    rules = {
        ("e", "f"): {("f", "e"): one, ("k",): inv, ("K",): -inv},
        ("e", "k"): {("k", "e"): q(-2)},
        ("e", "K"): {("K", "e"): q(2)},
        ("k", "f"): {("f", "k"): q(-2)},
        ("K", "f"): {("f", "K"): q(2)},
        ("k", "K"): {(): one},
        ("K", "k"): {(): one},
    }
    return lambda x, y: rules.get((x, y))


def u_reference_product(d, *words):
    """Normal form as {(s, i, r): scalar} for f^s k^i e^r."""
    word = tuple(g for w in words for g in w)
    nf = reduce_words({word: CycloScalar.from_int(d, 1)}, u_rewrite(d))
    return {(w.count("f"), w.count("k") - w.count("K"), w.count("e")): c for w, c in nf.items()}


# Phi_n, Psi_n --------------------------------------------------------------------------------

def listed_capital():
    """The eight hand-listed polynomials, typed in independently of the package table."""
    X0, X1, X2, X = (MultiPoly.variable(VARS4, v) for v in ("X0", "X1", "X2", "X"))
    ONE = MultiPoly.constant(VARS4, 1)
    sq = X0 * X0 + X1 * X1 + X2 * X2
    p = X0 * X1 * X2
    return {
        0: (8 * ONE, 30 * ONE),
        1: (X0, X),
        2: (X0 * X0 - 2 * X + 4, X * X - 8 * X + 2 * (sq - p) + 10),
        3: (X0 ** 3 - 3 * (X - 1) * X0 + 3 * X1 * X2,
            X ** 3 - 3 * (p + sq + 1) * X + 3 * (X0 ** 2 * X1 ** 2 + X1 ** 2 * X2 ** 2 + X2 ** 2 * X0 ** 2 - p) + 6 * sq),
    }
