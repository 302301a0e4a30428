"""Standard fans and fan documents.

A fan document is the JSON object ``{"rank", "rays", "max_cones"[, "name"]}``
where ``max_cones`` lists ray indices.  Faces are always generated from the
maximal cones; documents that try to list them are rejected.
"""

from __future__ import annotations

import json
import random
from functools import cmp_to_key
from itertools import combinations
from pathlib import Path
from typing import Any, TextIO

from .errors import ParseError, UnknownBuiltin, ValidationError
from .linalg import primitive
from .polyhedral import Fan

BUILTIN_NAMES = ("p1", "p2", "p3", "p1xp1", "hirzebruch:<a>", "wp112")
_DOC_KEYS = {"rank", "rays", "max_cones", "name"}


def _projective_space(k: int) -> dict:
    rays = [[int(i == j) for j in range(k)] for i in range(k)] + [[-1] * k]
    cones = [list(c) for c in combinations(range(k + 1), k)]
    return {"name": f"p{k}", "rank": k, "rays": rays, "max_cones": cones}


def builtin(name: str) -> dict:
    """Fan document for a named toric variety."""
    if name in ("p1", "p2", "p3"):
        return _projective_space(int(name[1]))
    if name == "p1xp1":
        return {
            "name": "p1xp1",
            "rank": 2,
            "rays": [[1, 0], [0, 1], [-1, 0], [0, -1]],
            "max_cones": [[0, 1], [1, 2], [2, 3], [3, 0]],
        }
    if name == "wp112":
        return {
            "name": "wp112",
            "rank": 2,
            "rays": [[1, 0], [0, 1], [-1, -2]],
            "max_cones": [[0, 1], [1, 2], [2, 0]],
        }
    if name.startswith("hirzebruch:"):
        try:
            a = int(name.split(":", 1)[1])
        except ValueError:
            raise UnknownBuiltin(f"bad Hirzebruch parameter in {name!r}") from None
        if a < 0:
            raise UnknownBuiltin("Hirzebruch parameter must be >= 0")
        return {
            "name": name,
            "rank": 2,
            "rays": [[1, 0], [0, 1], [-1, a], [0, -1]],
            "max_cones": [[0, 1], [1, 2], [2, 3], [3, 0]],
        }
    raise UnknownBuiltin(f"unknown builtin {name!r}; known: {', '.join(BUILTIN_NAMES)}")


def builtin_fan(name: str) -> Fan:
    return fan_from_document(builtin(name))


def standard_builtins() -> list[str]:
    """Concrete builtin names used by the test and acceptance suites."""
    return ["p1", "p2", "p3", "p1xp1", "hirzebruch:0", "hirzebruch:1", "hirzebruch:2", "wp112"]


# ---------------------------------------------------------------------------
# Documents
# ---------------------------------------------------------------------------

def _check_int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what} must be an integer, got {x!r}")
    return x


def fan_from_document(doc: Any, *, validate: bool = True) -> Fan:
    """Build (and by default validate) a fan from a parsed document.

    Raises :class:`ParseError` for schema problems and :class:`ValidationError`
    when the generated fan is not a valid complete fan.
    """
    if not isinstance(doc, dict):
        raise ParseError("fan document must be a JSON object")
    extra = set(doc) - _DOC_KEYS
    if extra:
        raise ParseError(f"unexpected keys {sorted(extra)}; faces are generated from max_cones")
    for key in ("rank", "rays", "max_cones"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    rank = _check_int(doc["rank"], "rank")
    if rank < 0:
        raise ParseError("rank must be nonnegative")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("name must be a string")
    if not isinstance(doc["rays"], list) or not isinstance(doc["max_cones"], list):
        raise ParseError("rays and max_cones must be lists")

    rays = []
    for i, r in enumerate(doc["rays"]):
        if not isinstance(r, list) or len(r) != rank:
            raise ParseError(f"ray {i} must be a list of {rank} integers")
        v = tuple(_check_int(x, f"ray {i} entry") for x in r)
        if not any(v):
            raise ParseError(f"ray {i} is zero")
        rays.append(primitive(v))
    if len(set(rays)) != len(rays):
        raise ParseError("duplicate rays (after dividing by the gcd)")

    cones = []
    for j, c in enumerate(doc["max_cones"]):
        if not isinstance(c, list):
            raise ParseError(f"max cone {j} must be a list of ray indices")
        idx = [_check_int(i, f"max cone {j} index") for i in c]
        if any(i < 0 or i >= len(rays) for i in idx):
            raise ParseError(f"max cone {j} has an out-of-range ray index")
        if len(set(idx)) != len(idx):
            raise ParseError(f"max cone {j} repeats a ray index")
        cones.append(idx)

    fan = Fan.from_max_cones(rank, rays, cones, name=name)
    if validate and not fan.validation.ok:
        raise ValidationError(fan.validation)
    return fan


def load_document(source: str | Path | TextIO) -> Any:
    """Read JSON from a path, ``-`` (stdin) or an open file."""
    try:
        if hasattr(source, "read"):
            return json.load(source)
        if str(source) == "-":
            import sys

            return json.load(sys.stdin)
        with open(source, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc}") from None


def parse_fan(source: str | Path | TextIO, *, validate: bool = True) -> Fan:
    return fan_from_document(load_document(source), validate=validate)


def dump_document(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":"))


# ---------------------------------------------------------------------------
# Random complete fans
# ---------------------------------------------------------------------------

def _angle_cmp(u, v) -> int:
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def random_complete_2d_fan(rng: random.Random, nrays: int, bound: int = 6) -> Fan:
    """Complete fan in ``Z^2`` on ``nrays`` random primitive rays sorted by angle.

    Rays are drawn until consecutive rays (cyclically) are less than a half
    turn apart, so every consecutive pair spans a strictly convex cone.
    """
    if nrays < 3:
        raise ValueError("a complete 2D fan needs at least 3 rays")
    while True:
        found = set()
        while len(found) < nrays:
            v = (rng.randint(-bound, bound), rng.randint(-bound, bound))
            if v != (0, 0):
                found.add(primitive(v))
        rays = sorted(found, key=cmp_to_key(_angle_cmp))
        ok = all(
            rays[i][0] * rays[(i + 1) % nrays][1] - rays[i][1] * rays[(i + 1) % nrays][0] > 0
            for i in range(nrays)
        )
        if ok:
            cones = [[i, (i + 1) % nrays] for i in range(nrays)]
            return Fan.from_max_cones(2, rays, cones, name=f"random2d[{nrays}]")
