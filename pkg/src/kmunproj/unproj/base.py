from __future__ import annotations

from dataclasses import dataclass, field

from ..groebner import Ideal


class UnprojectionError(ValueError):
    pass


class IdentityFailure(AssertionError):
    """An identity that must hold symbolically did not; signals a bug."""


@dataclass
class UnprojectionResult:
    kind: str
    data: object
    unproj_var: str
    ideal: Ideal
    g: tuple
    work: dict = field(default_factory=dict)

    @property
    def ctx(self):
        return self.ideal.ctx

    @property
    def base_gens(self):
        return self.ideal.gens[: len(self.ideal.gens) - len(self.g)]

    @property
    def unprojection_equations(self):
        return self.ideal.gens[len(self.ideal.gens) - len(self.g):]


def extended_context(ctx, tname):
    if tname in ctx:
        raise UnprojectionError(f"unprojection variable {tname!r} already names a variable")
    return ctx.extend(tname)


def assemble(base_gens, slots, g, tname):
    """``(base..., T*slot_1 - g_1, ...)`` in the context extended by ``tname``."""
    ctx = base_gens[0].ctx if base_gens else slots[0].ctx
    ext = extended_context(ctx, tname)
    T = ext.var(tname)
    gens = [p.embed(ext) for p in base_gens]
    gens += [T * s.embed(ext) - gi.embed(ext) for s, gi in zip(slots, g)]
    return Ideal(ext, gens)
