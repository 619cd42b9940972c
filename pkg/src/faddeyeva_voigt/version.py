"""Resolve the package version into `__version__`.

In a development checkout the version comes from the hatch-vcs metadata of the
project, for an installed distribution from `importlib.metadata`.
"""


# ruff and mypy per file settings
# others
# ruff: noqa: PLC0415

# fmt: off


def _get_hatch_version() -> str | None:
    """Version from the hatch project metadata or None outside a development checkout."""
    import os

    try:
        from hatchling.metadata.core import ProjectMetadata
        from hatchling.plugin.manager import PluginManager
        from hatchling.utils.fs import locate_file
    except ImportError:
        return None

    pyproject_toml = locate_file(__file__, "pyproject.toml")
    if pyproject_toml is None:
        # installed wheel next to a hatchling installation
        return None
    metadata = ProjectMetadata(root=os.path.dirname(pyproject_toml), plugin_manager=PluginManager())
    try:
        return metadata.core.version or metadata.hatch.version.cached
    except Exception:  # noqa: BLE001
        return None


def _get_importlib_metadata_version() -> str:
    """Version of the installed distribution."""
    from importlib.metadata import PackageNotFoundError, version

    try:
        return version("faddeyeva-voigt")
    except PackageNotFoundError:
        return "0.0.0"


__version__ = _get_hatch_version() or _get_importlib_metadata_version()
