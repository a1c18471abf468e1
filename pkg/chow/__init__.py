from .classe import class_group_affine
from .a2 import ConNoLlis, ConjectureReport, ResultatA2, a2_smooth_affine, conjecture_check
