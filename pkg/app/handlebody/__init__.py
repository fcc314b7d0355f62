from app.handlebody.models import GENERATORS, BasisTriple, SkeinVector, h1_class, order_less
from app.handlebody.forms import inner_product, norm_sq

__all__ = ["GENERATORS", "BasisTriple", "SkeinVector", "h1_class", "order_less", "inner_product", "norm_sq"]
