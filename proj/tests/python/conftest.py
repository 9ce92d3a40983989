import os
import sys

_root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
_python_dir = os.path.join(_root, "python")
if _python_dir not in sys.path:
    sys.path.insert(0, _python_dir)
_module_dir = os.environ.get("CECAC_MODULE_DIR")
if _module_dir and _module_dir not in sys.path:
    sys.path.insert(0, _module_dir)
