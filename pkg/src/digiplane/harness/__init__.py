"""Generators, windows and the theorem-suite runner.

Names are resolved lazily: ``digiplane.jordan`` imports ``harness.report``,
and an eager import of the suites here would be circular.
"""
from importlib import import_module

_EXPORTS = {
    "Counterexample": "report", "VerificationReport": "report", "SCHEMA": "report",
    "Window": "window", "WindowCapError": "window", "DEFAULT_CAP": "window", "CAP_ENV": "window",
    "enumerate_closed_curves": "generators", "enumerate_paths": "generators",
    "enumerate_jordan_curves": "generators", "enumerate_arcs": "generators",
    "random_grid_set": "generators", "RANDOM_SCHEME": "generators",
    "SuiteParams": "suites", "run_suite": "suites", "suite_names": "suites",
    "REGISTRY": "suites", "UnknownSuiteError": "suites",
}

__all__ = sorted(_EXPORTS)


def __getattr__(name):
    if name not in _EXPORTS:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
    return getattr(import_module(f".{_EXPORTS[name]}", __name__), name)
