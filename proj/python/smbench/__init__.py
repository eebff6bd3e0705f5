"""Python interface to the sliding-mode controller benchmarking toolkit.

The heavy lifting lives in the compiled extension ``smbench._core``; this
package re-exports its public names.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__doc__ = _core_doc
__version__ = "1.0.0"
