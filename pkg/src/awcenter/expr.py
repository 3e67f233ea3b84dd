"""Parse and normalize algebra elements given as text or JSON.

Text expressions use Python operator syntax over generator names, for example
``(A*B - q**2*B*A)**2`` or ``t1**-1 * u * v**2``.  Negative powers are allowed
for invertible generators only.
"""
from __future__ import annotations

import ast
import json

from .daha import DahaElement, abc, basic, daha_algebra, param, param_sum, reconstruct_generators
from .uaw import UAWElement, casimir_omega, generators, uaw_algebra
from .uqsl2 import UElement, chevalley, coef, equitable, lambda_casimir, u_algebra

ALGEBRAS = ("uaw", "u", "daha")


class ExpressionError(ValueError):
    pass


def _names(alg_kind: str, d: int) -> tuple:
    """(name -> element, name -> inverse element) for one algebra."""
    if alg_kind == "uaw":
        alg = uaw_algebra(d)
        names = dict(generators(d))
        names["Omega"] = casimir_omega(d)
        return alg, names, {}
    if alg_kind == "u":
        alg = u_algebra(d)
        names = {g: chevalley(g, d) for g in ("e", "f", "k")}
        names.update({g: equitable(g, d) for g in ("x", "y", "z")})
        names.update({c: coef(c, d) for c in "abc"})
        names["Lambda"] = lambda_casimir(d)
        inv = {"k": chevalley("kinv", d), "y": equitable("yinv", d)}
        inv.update({c: coef(c, d, -1) for c in "abc"})
        return alg, names, inv
    if alg_kind == "daha":
        alg = daha_algebra(d)
        b = basic(d)
        t0, t1, t0v, t1v = reconstruct_generators(d)
        names = {"t0": t0, "t1": t1, "t0v": t0v, "t1v": t1v, "u": b["u"], "v": b["v"]}
        names.update({g: abc(g, d) for g in "ABC"})
        names.update({k: param(k, d) for k in ("k0", "k1", "k0v", "k1v")})
        inv = {"t1": b["t1inv"], "u": b["uinv"], "v": b["vinv"]}
        # t^-1 = (k + 1/k) - t for each quadratic Hecke generator
        inv["t0"] = param_sum("k0", d) - t0
        inv["t0v"] = param_sum("k0v", d) - t0v
        inv["t1v"] = param_sum("k1v", d) - t1v
        inv.update({k: param(k, d, -1) for k in ("k0", "k1", "k0v", "k1v")})
        return alg, names, inv
    raise ExpressionError(f"unknown algebra {alg_kind!r}; expected one of {ALGEBRAS}")


def evaluate(text: str, alg_kind: str, d: int):
    """Evaluate a text expression to a normalized element."""
    alg, names, inv = _names(alg_kind, d)
    one = alg.one()
    qel = alg.q(1) * one
    names["q"] = qel
    inv["q"] = alg.q(-1) * one

    def power(node, n):
        if n >= 0:
            return ev(node) ** n
        if isinstance(node, ast.Name) and node.id in inv:
            return inv[node.id] ** (-n)
        raise ExpressionError(f"negative power of a non-invertible expression: {ast.unparse(node)}")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Name):
            if node.id not in names:
                raise ExpressionError(f"unknown name {node.id!r} for algebra {alg_kind}")
            return names[node.id]
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return node.value * one
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            x = ev(node.operand)
            return -x if isinstance(node.op, ast.USub) else x
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                n = _int_exponent(node.right)
                return power(node.left, n)
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
        raise ExpressionError(f"unsupported syntax: {ast.unparse(node)}")

    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse expression: {exc}") from exc
    return ev(tree)


def _int_exponent(node) -> int:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_int_exponent(node.operand)
    raise ExpressionError(f"exponent must be an integer literal: {ast.unparse(node)}")


def from_json(obj: dict, alg_kind: str, d: int):
    """A serialized element; the d inside the object must match."""
    if int(obj.get("d", d)) != d:
        raise ExpressionError(f"element is serialized for d={obj['d']}, not d={d}")
    obj = dict(obj, d=d)
    if alg_kind == "uaw":
        return UAWElement.from_json(obj)
    if alg_kind == "u":
        return UElement.from_json(obj)
    if alg_kind == "daha":
        return DahaElement.from_json(obj)
    raise ExpressionError(f"unknown algebra {alg_kind!r}; expected one of {ALGEBRAS}")


def load(source: str, alg_kind: str, d: int):
    """JSON objects are read as serialized elements, anything else as a text expression."""
    stripped = source.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ExpressionError(f"invalid JSON element: {exc}") from exc
        return from_json(obj, alg_kind, d)
    return evaluate(stripped, alg_kind, d)
