"""Python bindings for the hybrid-cycle pollution game solver.

The compiled extension carries the whole surface; this package just re-exports
it so both an installed wheel (which places ``_hlcgame`` inside the package)
and an in-tree build (extension on ``PYTHONPATH`` next to the package) work.
"""

try:
    from ._hlcgame import *  # noqa: F401,F403
    from ._hlcgame import __doc__ as _ext_doc
except ImportError:
    from _hlcgame import *  # noqa: F401,F403
    from _hlcgame import __doc__ as _ext_doc

__doc__ = (__doc__ or "") + "\n\n" + (_ext_doc or "")
