"""Select the compiled core if it was built, else the numpy fallback.

Set ``CHEBPROB_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pycore

python_core = _pycore

if os.environ.get("CHEBPROB_PURE_PYTHON"):
    core = _pycore
    compiled_core = None
else:
    try:
        from . import _ccore
    except ImportError:
        core = _pycore
        compiled_core = None
    else:
        core = _ccore
        compiled_core = _ccore

BACKEND = "cython" if core is not _pycore else "python"
