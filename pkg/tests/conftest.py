import os
import sys

# Tests import the package as `src.*` from the repository root
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
