from .base import IdentityFailure, UnprojectionError, UnprojectionResult
from .ci import CiData, CramerCertificate, cramer_certificate, unproject_ci
from .jerry import (JerryData, jerry_data_from_matrix, jerry_generic, jerry_generic_g,
                    unproject_jerry)
from .tom import (TomData, tom_d3, tom_data_from_matrix, tom_generic, tom_generic_g,
                  tom_specialized, unproject_tom)
