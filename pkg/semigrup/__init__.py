from .punt import ParametresInvalids, Semigrup
from .generadors import hilbert_generators_2d, generated_in_box, nilpotence_witness
from .quocient import (
    SemigroupBasisReport,
    boundary_image,
    floor_sum_identity,
    nilradical_relation,
    quotient_basis,
)
