"""Import-graph checks: every module imports on its own."""

from __future__ import annotations

import importlib
import sys

import pytest

_MODULES = [
    "symquad.config",
    "symquad.models",
    "symquad.models.rational",
    "symquad.models.polynomial",
    "symquad.models.representation",
    "symquad.models.result",
    "symquad.engine.errors",
    "symquad.engine.algebra",
    "symquad.engine.representation",
    "symquad.engine.identities",
    "symquad.engine.families",
    "symquad.engine.verify",
    "symquad.engine.quadratize",
    "symquad.engine.lift",
    "symquad.engine.report",
    "symquad.cli",
    "symquad.api.routes",
    "symquad.main",
]


@pytest.mark.parametrize("module_name", _MODULES)
def test_no_circular_imports(module_name: str):
    saved = dict(sys.modules)
    for name in [k for k in sys.modules if k.startswith("symquad")]:
        del sys.modules[name]
    try:
        importlib.import_module(module_name)
    except ImportError as e:
        if "circular" in str(e).lower():
            pytest.fail(f"Circular import detected in {module_name}: {e}")
        raise
    finally:
        sys.modules.update(saved)


def test_cli_parser_lists_commands():
    from symquad.cli import build_parser
    from symquad.engine import family_names

    help_text = build_parser().format_help()
    assert "represent" in help_text
    assert family_names()


def test_errors_form_one_hierarchy():
    from symquad.engine import InputError, PreconditionError, ResourceError, SymquadError

    for exc in (InputError, PreconditionError, ResourceError):
        assert issubclass(exc, SymquadError)
