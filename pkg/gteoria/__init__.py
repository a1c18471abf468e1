from .grup import GK, GroupExpr, ModTensorGK, TensorGK, canonicalize, pretty
from .cos import CosInvalid, FieldModel, HipotesiViolada, evaluate, tensor
from .teoremes import GrauNoSuportat, PasDerivacio
