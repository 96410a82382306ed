"""Newton polygons of implicit curves from rational parameterizations."""

import json

from . import _core
from ._core import Error

__all__ = ["Error", "predict", "verify", "implicitize", "enumerate", "plot", "default_seed"]

default_seed = _core.default_seed


def predict(curve: str) -> dict:
    return json.loads(_core.predict(curve))


def verify(curve: str, trials: int = 3, bound: int = 16, seed: int | None = None) -> dict:
    return json.loads(_core.verify(curve, trials, bound, default_seed() if seed is None else seed))


def implicitize(curve: str, seed: int | None = None, bound: int = 16) -> dict:
    return json.loads(_core.implicitize(curve, default_seed() if seed is None else seed, bound))


def enumerate(curve: str, selection: int = 1, limit: int = -1, force: bool = False, seed: int | None = None) -> list:
    certs = _core.enumerate(curve, selection, limit, force, default_seed() if seed is None else seed)
    return [json.loads(c) for c in certs]


def plot(curve: str) -> str:
    """SVG of the predicted polygon, with the oracle polygon dashed when coefficients are concrete."""
    return _core.plot(curve)
