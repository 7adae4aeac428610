"""Small named diagrams used by the tests, the CLI and the scripts."""
from .bdd import Bdd, parse_bdd

PSI_TEXT = """\
# The ten-variable example function psi.
# Nodes a..f are listed in a shelling order from below.
nvars 10
node a 7 T F
node b 8 F T
node c 7 F b
node d 4 T c
node e 3 a b
node f 1 e d
root f
"""


def psi() -> Bdd:
    return parse_bdd(PSI_TEXT)
