"""Polycyclic groups, nonabelian tensor squares and Schur multiplier exponents.

Inputs are ``catalog:family:params`` strings, presentation text, or paths to
PC files. Reports are the dictionaries the ``schurkit`` CLI prints as JSON.
"""

import json
import os

from . import _schurkit
from ._schurkit import Error, IoError, ParseError, ResourceError, ValidationError

__all__ = [
    "Error", "IoError", "ParseError", "ResourceError", "ValidationError",
    "analyze", "tensor_square", "verify_identities", "collect", "scan",
    "presentation", "catalog_families", "default_catalog",
]


def _text(source):
    if isinstance(source, os.PathLike):
        try:
            with open(source, encoding="utf-8") as f:
                return f.read()
        except OSError as e:
            raise IoError(f"cannot read {source}: {e.strerror}") from e
    return source


def analyze(source):
    return json.loads(_schurkit.analyze(_text(source)))


def tensor_square(source, budget=0, tier="auto", extended=False, checks=False, seed=1):
    return json.loads(_schurkit.tensor_square(_text(source), budget, tier, extended, checks, seed))


def verify_identities(text, points=()):
    return json.loads(_schurkit.verify_identities(_text(text), list(points)))


def collect(expr, symbols, nil_class):
    """Hall-basis exponents of ``expr`` in the free nilpotent group on ``symbols``."""
    return [int(e) for e in _schurkit.collect(expr, list(symbols), nil_class)]


def scan(sources, budget=0, checks=True, seed=1):
    inputs = []
    for s in sources:
        name = os.fspath(s) if isinstance(s, os.PathLike) else s
        inputs.append((name, _text(s)))
    return json.loads(_schurkit.scan(inputs, budget, checks, seed))


def presentation(source):
    return _schurkit.presentation(_text(source))


catalog_families = _schurkit.catalog_families
default_catalog = _schurkit.default_catalog
