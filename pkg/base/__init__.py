from .reticle import ErrorToric
