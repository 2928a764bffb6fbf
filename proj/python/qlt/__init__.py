try:
    from ._qlt import *  # noqa: F401,F403
except ImportError:  # running against a build tree, module next to the package
    from _qlt import *  # noqa: F401,F403
