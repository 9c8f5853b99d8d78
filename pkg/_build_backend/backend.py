"""setuptools build backend that ignores the root ``setup.py``.

The root ``setup.py`` is the project's logger setup module (``setup_loggers``),
not a packaging script, so all packaging metadata lives in ``pyproject.toml``.
"""
from setuptools import build_meta as _orig
from setuptools.build_meta import *  # noqa: F401,F403


class _Backend(_orig._BuildMetaBackend):
    def run_setup(self, setup_script: str = "setup.py") -> None:
        # Run setuptools with pyproject.toml metadata only.
        with _orig.no_install_setup_requires():
            exec("from setuptools import setup; setup()", {"__file__": "<pyproject>", "__name__": "__main__"})


_backend = _Backend()
get_requires_for_build_wheel = _backend.get_requires_for_build_wheel
get_requires_for_build_sdist = _backend.get_requires_for_build_sdist
prepare_metadata_for_build_wheel = _backend.prepare_metadata_for_build_wheel
build_wheel = _backend.build_wheel
build_sdist = _backend.build_sdist
get_requires_for_build_editable = _backend.get_requires_for_build_editable
prepare_metadata_for_build_editable = _backend.prepare_metadata_for_build_editable
build_editable = _backend.build_editable
