"""Exact verification toolkit for the super Amitsur-Levitzki identity on osp(1,2n)."""

from superal.core.settings import TOOLKIT_VERSION

__version__ = TOOLKIT_VERSION
