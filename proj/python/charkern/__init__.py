"""Exact character tables and character-kernel invariants of finite groups.

Thin wrapper over the compiled core: every function passes specs in and
reports out as plain dicts/lists, with JSON strings on the wire.
"""

import json as _json

try:
    from . import _charkern as _core  # installed package layout
except ImportError:  # pragma: no cover - build-tree layout
    import _charkern as _core

__all__ = [
    "analyze",
    "character_table",
    "verify",
    "search",
    "presets",
    "claim_ids",
]


def analyze(spec, cap=0):
    """Structural report (metadata, degrees, kernel/predicate profiles)."""
    return _json.loads(_core.analyze_json(_json.dumps(spec), cap))


def character_table(spec, cap=0):
    """Exact character table as degree + cyclotomic multiplicity vectors."""
    return _json.loads(_core.table_json(_json.dumps(spec), cap))


def verify(entries=None, claims=None, jobs=1, include_p2=False, cap=0):
    """Claim verdicts over a corpus (built-in corpus when entries is None)."""
    manifest = None if entries is None else _json.dumps({"entries": entries})
    return _json.loads(_core.verify_json(manifest, claims, jobs, include_p2, cap))


def search(spec, order, nilpotency=None, limit=16, cap=0):
    """Subgroup hunt: manifest of subgroups of the given order (and class)."""
    return _json.loads(_core.search_json(_json.dumps(spec), order, nilpotency, limit, cap))


def presets():
    """Built-in preset groups: name, order, tags."""
    return _json.loads(_core.presets_json())


def claim_ids():
    """All checkable claim identifiers, in report order."""
    return list(_core.claim_ids())
