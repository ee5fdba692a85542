from pathlib import Path

from handlength.game import PointGameSpec

GAMES_DIR = Path(__file__).resolve().parent.parent / "games"

CUSTOM_GAMES = {
    "no_eleven": PointGameSpec({7}, {2, 3, 12}, {4, 5, 6, 8, 9, 10, 11}, name="no_eleven"),
    "six_craps": PointGameSpec({7, 11}, {2, 3, 6, 12}, {4, 5, 8, 9, 10}, name="six_craps"),
    "lopsided": PointGameSpec({2, 7}, {12}, {3, 4, 5, 6, 8, 9, 10, 11}, name="lopsided"),
}

acceptance_lines: list[str] = []


def record_acceptance(number: int, passed: bool, text: str) -> None:
    line = f"[criterion {number:2d}] {'PASS' if passed else 'FAIL'}  {text}"
    print(line)
    acceptance_lines.append(line)
