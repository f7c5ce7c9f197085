"""JSON construction recipes.

A recipe is an object with a ``construction`` key.  Matrices are written as
lists of ``0``/``1`` strings, as ``"rows cols"`` text, or as
``{"rows": [...], "cols": n}`` when a matrix may have no rows.
Complex arguments are either a matrix (a two-term complex), ``{"cycle": L}``
or ``{"diffs": [d1, d2, ...]}``.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from ldpc_products.codes import BbsSpec, CssCode
from ldpc_products.complexes import ChainComplex, cycle_graph, from_classical, to_css
from ldpc_products.f2core import F2Matrix
from ldpc_products.fixtures import fixture
from ldpc_products.products import (
    GroupAction,
    PolyMatrix,
    TwistSpec,
    balanced_product,
    distance_balance,
    fiber_bundle,
    hypergraph_product,
    lifted_product,
    rotation_action,
    tensor,
)

CONSTRUCTIONS = (
    "classical", "hgp", "tensor", "fiber_bundle", "lifted", "balanced", "distance_balance", "bbs", "fixture", "css",
)


class RecipeError(ValueError):
    """Malformed or inconsistent recipe."""


def _require(obj: Mapping[str, Any], key: str) -> Any:
    if key not in obj:
        raise RecipeError(f"missing field {key!r}")
    return obj[key]


def parse_matrix(value: Any, ncols: int | None = None) -> F2Matrix:
    try:
        if isinstance(value, str):
            return F2Matrix.from_text(value)
        if isinstance(value, Mapping):
            return F2Matrix.from_strings(list(_require(value, "rows")), int(_require(value, "cols")))
        if isinstance(value, list):
            if not value and ncols is None:
                raise RecipeError("an empty matrix needs an explicit column count")
            return F2Matrix.from_strings(value, ncols)
    except RecipeError:
        raise
    except (ValueError, TypeError) as exc:
        raise RecipeError(f"bad matrix literal: {exc}") from exc
    raise RecipeError(f"cannot read a matrix from {type(value).__name__}")


def parse_complex(value: Any) -> ChainComplex:
    if isinstance(value, Mapping) and "cycle" in value:
        return cycle_graph(int(value["cycle"]))
    if isinstance(value, Mapping) and "diffs" in value:
        diffs = [parse_matrix(m) for m in value["diffs"]]
        try:
            return ChainComplex(diffs)
        except ValueError as exc:
            raise RecipeError(str(exc)) from exc
    return from_classical(parse_matrix(value))


def _perm_table(value: Any) -> dict[int, list[list[int]]]:
    if not isinstance(value, Mapping):
        raise RecipeError("group action tables map degrees to generator lists")
    return {int(k): [list(map(int, perm)) for perm in gens] for k, gens in value.items()}


def _css(recipe: Mapping[str, Any]) -> CssCode:
    n = recipe.get("n")
    hx = parse_matrix(_require(recipe, "hx"), n)
    hz = parse_matrix(_require(recipe, "hz"), n if n is not None else hx.ncols)
    return CssCode(hx, hz, name=recipe.get("name", ""))


def build(recipe: Mapping[str, Any]) -> CssCode | BbsSpec:
    """Construct the code a recipe describes; ``bbs`` recipes give a :class:`BbsSpec`."""
    if not isinstance(recipe, Mapping):
        raise RecipeError("recipe must be a JSON object")
    kind = _require(recipe, "construction")
    name = recipe.get("name", kind)
    try:
        if kind == "fixture":
            return fixture(_require(recipe, "name"))
        if kind == "css":
            return _css(recipe)
        if kind == "classical":
            h = parse_matrix(_require(recipe, "h"))
            return CssCode(F2Matrix.zeros(0, h.ncols), h, name=name)
        if kind == "hgp":
            code = hypergraph_product(parse_matrix(_require(recipe, "h1")), parse_matrix(_require(recipe, "h2")))
        elif kind == "tensor":
            cx = tensor(parse_complex(_require(recipe, "c")), parse_complex(_require(recipe, "d")))
            code = to_css(cx, int(recipe.get("degree", 1)))
        elif kind == "fiber_bundle":
            twist = TwistSpec({(int(c), int(b)): int(s) for c, b, s in recipe.get("twist", [])})
            code = fiber_bundle(parse_complex(_require(recipe, "base")), parse_complex(_require(recipe, "fiber")), twist)
        elif kind == "lifted":
            ell = int(_require(recipe, "ell"))
            a = PolyMatrix.parse(_require(recipe, "a"), ell)
            b = PolyMatrix.parse(_require(recipe, "b"), ell)
            code = lifted_product(a, b)
        elif kind == "balanced":
            c = parse_complex(_require(recipe, "c"))
            d = parse_complex(_require(recipe, "d"))
            order = int(_require(recipe, "order"))
            if recipe.get("rotation"):
                action = rotation_action(c, d, order)
            else:
                action = GroupAction(order, _perm_table(_require(recipe, "on_c")), _perm_table(_require(recipe, "on_d")))
            code = to_css(balanced_product(c, d, action), int(recipe.get("degree", 1)))
        elif kind == "distance_balance":
            inner = build(_require(recipe, "code"))
            if not isinstance(inner, CssCode):
                raise RecipeError("distance_balance needs a CSS code")
            code = distance_balance(inner, parse_matrix(_require(recipe, "h")), recipe.get("side", "Z"))
        elif kind == "bbs":
            if "a" in recipe:
                return BbsSpec(parse_matrix(recipe["a"]))
            g1 = parse_matrix(_require(recipe, "g1"))
            g2 = parse_matrix(_require(recipe, "g2"))
            q = parse_matrix(recipe["q"]) if "q" in recipe else None
            return BbsSpec.from_generators(g1, g2, q)
        else:
            raise RecipeError(f"unknown construction {kind!r}; expected one of {', '.join(CONSTRUCTIONS)}")
    except (KeyError, IndexError, TypeError) as exc:
        raise RecipeError(str(exc)) from exc
    except RecipeError:
        raise
    except ValueError as exc:
        raise RecipeError(str(exc)) from exc
    return CssCode(code.hx, code.hz, name=name)


def serialize(code: CssCode) -> dict[str, Any]:
    """Canonical ``css`` recipe reproducing ``code`` exactly."""
    return {
        "construction": "css",
        "name": code.name,
        "n": code.n,
        "hx": code.hx.to_strings(),
        "hz": code.hz.to_strings(),
    }


def load(arg: str) -> CssCode | BbsSpec:
    """Resolve ``fixture:NAME`` or a path to a JSON recipe."""
    if arg.startswith("fixture:"):
        try:
            return fixture(arg.removeprefix("fixture:"))
        except KeyError as exc:
            raise RecipeError(exc.args[0]) from exc
    try:
        text = Path(arg).read_text()
    except OSError as exc:
        raise RecipeError(f"cannot read {arg}: {exc.strerror}") from exc
    try:
        recipe = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RecipeError(f"{arg}: invalid JSON ({exc})") from exc
    return build(recipe)
