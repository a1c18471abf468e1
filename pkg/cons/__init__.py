from .con import Cone, ConDegenerat, ConNoSimplicial
from .superficie import SurfaceNormalForm, normalize_surface_cone
from .ventall import Fan, Marca, VentallInvalid, PesosInvalids
