"""Exact computations for the algebras A_e: resolutions, Hochschild cohomology and the wreath layer."""
from importlib.metadata import PackageNotFoundError, version as _version

try:
    __version__ = _version("artifact")
except PackageNotFoundError:  # running from a source tree
    __version__ = "0.1.0"
