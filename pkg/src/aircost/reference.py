"""Static filtration reference data: HEPA class efficiencies, MERV ratings,
and typical particle-size ranges for common airborne pollutants.

These tables are lookup data only; nothing in the cost engine depends on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from aircost.errors import DomainError, NotFoundError

# HEPA/ULPA capture efficiency by class. Paired E/H labels at the same level
# share one efficiency and are treated as aliases of each other.
HEPA_LEVELS: tuple[tuple[tuple[str, ...], float], ...] = (
    (("E10", "H10"), 0.85),
    (("E11", "H11"), 0.95),
    (("E12", "H12"), 0.995),
    (("H13",), 0.9997),
    (("H14",), 0.99975),
    (("U15",), 0.999975),
    (("U16",), 0.9999975),
    (("U17",), 0.999999),
)

HEPA_EFFICIENCY: dict[str, float] = {
    label: eff for labels, eff in HEPA_LEVELS for label in labels
}


@dataclass(frozen=True)
class MervRating:
    rating: int
    dust_efficiency: str
    particle_size: str
    efficiency_lower_bound: float


MERV_RATINGS: dict[int, MervRating] = {
    r.rating: r
    for r in (
        MervRating(20, "≥ 99.999%", "0.1 – 0.2 microns", 0.99999),
        MervRating(19, "≥ 99.99%", "0.1 – 0.2 microns", 0.9999),
        MervRating(18, "≥ 99.97%", "0.1 – 0.2 microns", 0.9997),
        MervRating(17, "≥ 99.97%", "0.3 microns", 0.9997),
        MervRating(16, "≥ 99.95%", "0.3 – 1 micron", 0.9995),
        MervRating(15, "≥ 95%", "0.3 – 1 micron", 0.95),
        MervRating(14, "90 – 95%", "0.3 – 1 micron", 0.90),
        MervRating(13, "89 – 90%", "0.3 – 1 micron", 0.89),
        MervRating(12, "70 – 75%", "1 – 3 microns", 0.70),
        MervRating(11, "60 – 65%", "1 – 3 microns", 0.60),
        MervRating(10, "50 – 55%", "1 – 3 microns", 0.50),
        MervRating(9, "40 – 45%", "1 – 3 microns", 0.40),
        MervRating(8, "30 – 35%", "3 – 10 microns", 0.30),
        MervRating(7, "25 – 30%", "3 – 10 microns", 0.25),
        MervRating(6, "< 20%", "3 – 10 microns", 0.0),
        MervRating(5, "< 20%", "3 – 10 microns", 0.0),
        MervRating(4, "< 20%", "≥ 10 microns", 0.0),
        MervRating(3, "< 20%", "≥ 10 microns", 0.0),
        MervRating(2, "< 20%", "≥ 10 microns", 0.0),
        MervRating(1, "< 20%", "≥ 10 microns", 0.0),
    )
}


@dataclass(frozen=True)
class PollutantSize:
    name: str
    min_microns: float
    max_microns: float


# Typical diameter ranges in microns, in source-table order.
POLLUTANT_SIZES: tuple[PollutantSize, ...] = (
    PollutantSize("Atmospheric Dust", 0.001, 40),
    PollutantSize("Bacteria", 0.3, 60),
    PollutantSize("Beach Sand", 100, 10000),
    PollutantSize("Burning Wood", 0.2, 3),
    PollutantSize("Cement Dust", 3, 100),
    PollutantSize("Clay, fine", 0.5, 1),
    PollutantSize("Coal Dust", 1, 100),
    PollutantSize("Combustion", 0.01, 0.1),
    PollutantSize("Dust Mites", 100, 300),
    PollutantSize("Fly Ash", 1, 1000),
    PollutantSize("Grain Dusts", 5, 1000),
    PollutantSize("Household dust", 0.05, 100),
    PollutantSize("Human Hair", 40, 300),
    PollutantSize("Insecticide Dusts", 0.5, 10),
    PollutantSize("Lead Dust", 0.1, 0.7),
    PollutantSize("Mold Spores", 10, 30),
    PollutantSize("Pet Dander", 0.5, 100),
    PollutantSize("Pollen", 10, 1000),
    PollutantSize("Smoke", 0.01, 0.1),
    PollutantSize("Tobacco Smoke", 0.01, 4),
    PollutantSize("Viruses", 0.005, 0.3),
)


def lookup_hepa_efficiency(class_label: str) -> float:
    """Return the capture-efficiency fraction for a HEPA/ULPA class label.

    Raises NotFoundError for labels outside E10/H10 .. U17.
    """
    eff = HEPA_EFFICIENCY.get(class_label.strip().upper())
    if eff is None:
        raise NotFoundError(f"unknown HEPA class label: {class_label!r}")
    return eff


def lookup_merv(rating: int) -> MervRating:
    """Return the MERV record for a rating in 1..20."""
    if not isinstance(rating, int) or isinstance(rating, bool):
        raise DomainError(f"MERV rating must be an integer, got {rating!r}")
    if rating < 1 or rating > 20:
        raise DomainError(f"MERV rating out of range 1..20: {rating}")
    return MERV_RATINGS[rating]


def classify_particle(size_microns: float) -> list[str]:
    """Names of all pollutants whose size range contains the given diameter.

    Ranges are closed intervals; results keep source-table order.
    """
    if not size_microns > 0:
        raise DomainError(f"particle size must be positive, got {size_microns}")
    return [
        p.name
        for p in POLLUTANT_SIZES
        if p.min_microns <= size_microns <= p.max_microns
    ]
