import math
import random
from fractions import Fraction

import pytest

from vacpol import Cutoff, Particle, ParticleSet, builtin_standard_model


@pytest.fixture
def sm_set() -> ParticleSet:
    return builtin_standard_model()


def random_particle_set(rng: random.Random, require_charge: bool = True) -> ParticleSet:
    """Random set matching the acceptance-suite distribution.

    1-30 particles, charges n/3 with |n| <= 3, masses log-uniform in
    [1e-4, 1e3] GeV, multiplicities 1-3.
    """
    count = rng.randint(1, 30)
    particles = []
    for i in range(count):
        numerator = rng.randint(-3, 3)
        if require_charge and i == 0 and numerator == 0:
            numerator = rng.choice([-3, -2, -1, 1, 2, 3])
        mass = math.exp(rng.uniform(math.log(1e-4), math.log(1e3)))
        particles.append(
            Particle(
                name=f"p{i}",
                charge_over_e=Fraction(numerator, 3),
                mass_gev=mass,
                multiplicity=rng.randint(1, 3),
            )
        )
    return ParticleSet(tuple(particles))


def random_cutoff_above(rng: random.Random, particles: ParticleSet) -> Cutoff:
    """Explicit cutoff strictly above every mass in the set."""
    top = max(p.mass_gev for p in particles)
    return Cutoff.explicit(top * math.exp(rng.uniform(0.5, 40.0)))
