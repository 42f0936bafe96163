import os
import sys

# make `from corpus import CORPUS` work regardless of invocation directory
sys.path.insert(0, os.path.dirname(__file__))
