"""Modeling and robustness analysis of bidirectional interdependent networks."""

try:
    from ._itdn import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _itdn import *  # noqa: F401,F403  (in-tree builds with the extension on sys.path)
