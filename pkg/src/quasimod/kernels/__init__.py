"""Kernel backend selection.

The compiled backend (_ckern, Cython) is preferred when importable; the pure
backend (_pykern) is the fallback and the reference implementation.  Set
QUASIMOD_BACKEND=pure or QUASIMOD_BACKEND=c to force a choice; forcing "c"
raises if the extension is missing.
"""

import os

_force = os.environ.get("QUASIMOD_BACKEND", "").strip().lower()

if _force in ("py", "pure", "python"):
    from . import _pykern as _impl
elif _force in ("c", "compiled", "ext"):
    from . import _ckern as _impl  # type: ignore[attr-defined]
elif _force:
    raise RuntimeError(f"unknown QUASIMOD_BACKEND value {_force!r} (use 'pure' or 'c')")
else:
    try:
        from . import _ckern as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykern as _impl

BACKEND = _impl.BACKEND_NAME

latin_violation = _impl.latin_violation
build_divisions = _impl.build_divisions
f_law_violation = _impl.f_law_violation
moufang_violation = _impl.moufang_violation
assoc_violation = _impl.assoc_violation
comm_violation = _impl.comm_violation
nucleus_members = _impl.nucleus_members
moufang_center_members = _impl.moufang_center_members
m_set_members = _impl.m_set_members
commutant_members = _impl.commutant_members
hom_violation = _impl.hom_violation
perm_closure = _impl.perm_closure
latin_squares = _impl.latin_squares
filter_f_tables = _impl.filter_f_tables
all_homs_brute = _impl.all_homs_brute
endo_search = _impl.endo_search


def available_backends():
    """Name -> module for every importable backend (used by the benchmark)."""
    from . import _pykern

    found = {"pure": _pykern}
    try:
        from . import _ckern  # type: ignore[attr-defined]

        found["c"] = _ckern
    except ImportError:
        pass
    return found
