"""Resolutions and Ext algebras of infinitesimal deformations of quiver algebras."""

import json

from . import _core
from ._core import InputError, MathError, Session, fixture_names, emit_dot, run_acceptance

__all__ = [
    "InputError",
    "MathError",
    "Report",
    "Session",
    "alg_check",
    "cocycle_check",
    "corollary_check",
    "deform_info",
    "emit_dot",
    "ext_basis",
    "ext_dims",
    "fixture_names",
    "resolve",
    "run_acceptance",
    "star_check",
    "yoneda",
]


class Report:
    """Exit code, text report and decoded JSON report of one command."""

    def __init__(self, raw):
        self.exit_code, self.text, payload = raw
        self.data = json.loads(payload)

    @property
    def ok(self):
        return self.exit_code == 0

    def __repr__(self):
        return f"Report(exit_code={self.exit_code}, command={self.data.get('command')!r})"


def _wrap(fn):
    def call(*args, **kwargs):
        return Report(fn(*args, **kwargs))

    call.__name__ = fn.__name__
    call.__doc__ = fn.__doc__
    return call


alg_check = _wrap(_core.alg_check)
cocycle_check = _wrap(_core.cocycle_check)
resolve = _wrap(_core.resolve)
star_check = _wrap(_core.star_check)
ext_dims = _wrap(_core.ext_dims)
ext_basis = _wrap(_core.ext_basis)
yoneda = _wrap(_core.yoneda)
corollary_check = _wrap(_core.corollary_check)
deform_info = _wrap(_core.deform_info)
