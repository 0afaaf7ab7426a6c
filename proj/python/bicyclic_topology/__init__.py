"""The bicyclic monoid C(p,q), exact regions of ω² and the topologies tau1, tau2, tauc."""

import json

from ._core import *  # noqa: F401,F403
from ._core import (
    _verify_lemma2,
    _verify_prop1,
    _verify_prop2,
    _verify_prop3,
    _verify_remark1,
    _verify_thm1,
)


def verify(claim, *args):
    """Run a verifier and return its report as a dict."""
    fns = {
        "prop1": _verify_prop1,
        "prop2": _verify_prop2,
        "prop3": _verify_prop3,
        "lemma2": _verify_lemma2,
        "thm1": _verify_thm1,
        "remark1": _verify_remark1,
    }
    if claim not in fns:
        raise ValueError(f"unknown claim {claim!r}")
    return json.loads(fns[claim](*args))
