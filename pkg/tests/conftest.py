import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

from apw import Morphism, load_morphism, parse_morphism

DATA_DIR = pathlib.Path(__file__).resolve().parent.parent / "data"

H_PREFIX_84 = (
    "abceacdabecaedacbaecdacebcedabceacdacbaecdacbeabd"
    "abceacdabecaedacebcedacbaecdabceacd"
)


@pytest.fixture(scope="session")
def h() -> Morphism:
    """The bundled 7-uniform endomorphism on five letters."""
    return load_morphism(str(DATA_DIR / "h.mor"))


@pytest.fixture(scope="session")
def fstar() -> Morphism:
    """A 4-uniform square-free morphism; even length, so not 3-anti-power."""
    return parse_morphism("alphabet: abcd\na -> cdbc\nb -> acbd\nc -> abad\n")


@pytest.fixture(scope="session")
def identity_ab() -> Morphism:
    return parse_morphism("a -> a\nb -> b\n")


@pytest.fixture(scope="session")
def identity_abc() -> Morphism:
    return parse_morphism("a -> a\nb -> b\nc -> c\n")
