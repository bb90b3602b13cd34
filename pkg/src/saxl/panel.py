"""The fixed panel of group actions used by the verification suite and scripts."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PanelEntry:
    spec: str
    # classification label: which listed family the action belongs to, or None
    family: str | None = None


PANEL: tuple[PanelEntry, ...] = (
    # Frobenius groups
    PanelEntry("AGL1:5:4", "frobenius"),
    PanelEntry("AGL1:7:3", "frobenius"),
    PanelEntry("AGL1:7:6", "frobenius"),
    PanelEntry("AGL1:11:5", "frobenius"),
    PanelEntry("AGL1:13:4", "frobenius"),
    PanelEntry("A:4", "frobenius"),
    # natural actions
    PanelEntry("S:3", "natural"),
    PanelEntry("S:4", "natural"),
    PanelEntry("S:5", "natural"),
    PanelEntry("S:6", "natural"),
    PanelEntry("A:5", "natural"),
    PanelEntry("A:6", "natural"),
    PanelEntry("A:7", "natural"),
    # projective line
    PanelEntry("PSL2:5", "projective"),
    PanelEntry("PGL2:5", "projective"),
    PanelEntry("PSL2:7", "projective"),
    PanelEntry("PGL2:7", "projective"),
    PanelEntry("PGL2:8", "projective"),
    PanelEntry("PSL2:9", "projective"),
    PanelEntry("PGL2:9", "projective"),
    PanelEntry("CAT:M10", "projective"),
    PanelEntry("PSL2:11", "projective"),
    PanelEntry("PGL2:11", "projective"),
    # sporadic
    PanelEntry("CAT:M11", "sporadic"),
    PanelEntry("CAT:M12", "sporadic"),
    # not in any listed family
    PanelEntry("PGammaL2:9"),
    PanelEntry("CAT:S5_PAIRS"),
    PanelEntry("CAT:M11_12"),
    PanelEntry("CAT:PSL(3,3)"),
    PanelEntry("WR:S:3:2:S:2"),
    PanelEntry("AFFDEL:5:1"),
    PanelEntry("AFFDEL:3:1"),
    PanelEntry("PAIRS:PGammaL2:8"),
    PanelEntry("CAT:AFF64_D18"),
    PanelEntry("CAT:AFF64_F42"),
    # semilinear groups of degree 8 and 9
    PanelEntry("CAT:AGAMMAL1_8"),
    PanelEntry("PGammaL2:8"),
)


def panel_specs() -> list[str]:
    return [e.spec for e in PANEL]
