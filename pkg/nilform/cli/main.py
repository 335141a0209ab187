#!/usr/bin/env python3
"""
Консольный интерфейс nilform.
Анализ нильинвариантных форм на алгебрах Ли в точной рациональной арифметике.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from pydantic import BaseModel

from ..config import settings
from .commands import (
    AUDIT_TARGETS,
    cmd_analyze,
    cmd_audit_stabilizer,
    cmd_decompose,
    cmd_gallery,
    cmd_verify_euclidean,
    cmd_verify_skewpairing,
    cmd_verify_so3_module,
)
from .documents import load
from .errors import (
    EXIT_COUNTEREXAMPLE,
    EXIT_INVALID_INPUT,
    EXIT_OK,
    InvalidInputError,
    NilformError,
    handle_error,
    handle_generic_error,
)
from .schemas import Report

logger = logging.getLogger(__name__)


def configure_logging(level) -> None:
    """Логирование в stderr через setup_logging или basicConfig, если файла нет."""
    try:
        from setup_logging import setup_logging
        setup_logging(level)
    except ImportError:
        logging.basicConfig(format=settings.LOG_FORMAT, level=level, handlers=[logging.StreamHandler(sys.stderr)])


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"ожидался список целых через запятую: '{text}'")


def build_parser() -> argparse.ArgumentParser:
    """Парсер аргументов командной строки."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--output', '-o', choices=['json', 'text'], default='json',
                        help='Формат вывода (по умолчанию: json)')
    common.add_argument('--seed', type=int, default=None,
                        help=f'Зерно случайных проб (по умолчанию: {settings.DEFAULT_SEED})')
    common.add_argument('--verbose', '-v', action='store_true',
                        help='Подробный вывод в stderr')

    parser = argparse.ArgumentParser(
        prog='nilform',
        description='Нильинвариантные формы на вещественных алгебрах Ли',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Примеры использования:
  %(prog)s analyze gallery://ex-3-8
  %(prog)s decompose algebra.json --output text
  %(prog)s audit-stabilizer gallery://ex-4-7 --target radical
  %(prog)s verify euclidean --n 2,3,4
  %(prog)s verify skew-pairing --l 0,1,2,3
  %(prog)s gallery list
        """,
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {settings.APP_VERSION}')
    sub = parser.add_subparsers(dest='command', required=True)

    for name, text in (
        ('analyze', 'Анализ формы и структурные сертификаты'),
        ('decompose', 'Разложение в ортогональное произведение идеалов'),
        ('audit-stabilizer', 'Аудит подалгебры h ⊆ K ⋉ R'),
    ):
        cmd = sub.add_parser(name, parents=[common], help=text)
        cmd.add_argument('source', nargs='?', help="Файл JSON, '-' (stdin) или gallery://NAME")
        cmd.add_argument('--input', '-i', dest='input_source', help='То же, что source')
        if name == 'audit-stabilizer':
            cmd.add_argument('--target', choices=AUDIT_TARGETS, default='annotation',
                             help='Какую подалгебру проверять (по умолчанию: annotation)')

    verify = sub.add_parser('verify', help='Проверочные прогоны')
    checks = verify.add_subparsers(dest='check', required=True)
    euclidean = checks.add_parser('euclidean', parents=[common], help='Формы на E_n = so(n) ⋉ R^n')
    euclidean.add_argument('--n', type=_int_list, required=True, help='Список n через запятую')
    euclidean.add_argument('--basis', action='store_true', help='Вывести базис пространства решений')
    skew = checks.add_parser('skew-pairing', parents=[common], help='Кососимметричные спаривания so3 × V')
    skew.add_argument('--l', type=_int_list, required=True, help='Список l через запятую')
    module = checks.add_parser('so3-module', parents=[common], help='Формы на so3 ⋉ V_{2l+1}')
    module.add_argument('--l', type=_int_list, required=True, help='Список l через запятую')

    gallery = sub.add_parser('gallery', parents=[common], help='Галерея примеров')
    gallery.add_argument('name', help="Имя записи или 'list'")
    return parser


def _source(args: argparse.Namespace) -> str:
    source = args.input_source or args.source
    if not source:
        raise InvalidInputError("Не указан входной документ (source или --input)")
    return source


def run(args: argparse.Namespace, argv: List[str]) -> BaseModel:
    """Выполнение команды по разобранным аргументам."""
    command = "nilform " + " ".join(argv)
    if args.command == 'analyze':
        return cmd_analyze(load(_source(args)), command, args.seed)
    if args.command == 'decompose':
        return cmd_decompose(load(_source(args)), command, args.seed)
    if args.command == 'audit-stabilizer':
        return cmd_audit_stabilizer(load(_source(args)), command, args.seed, args.target)
    if args.command == 'verify':
        if args.check == 'euclidean':
            return cmd_verify_euclidean(args.n, command, args.seed, args.basis)
        if args.check == 'skew-pairing':
            return cmd_verify_skewpairing(args.l, command)
        return cmd_verify_so3_module(args.l, command, args.seed)
    return cmd_gallery(args.name, command)


def render(model: BaseModel, output: str) -> str:
    """JSON с каноническим порядком ключей или краткий текст."""
    if output == 'text' and isinstance(model, Report):
        lines = [f"{'❌' if model.counterexample else '✅'} {model.summary}"]
        for key, value in sorted(model.verdicts.items()):
            lines.append(f"  {key}: {json.dumps(value, sort_keys=True, ensure_ascii=False, default=str)}")
        return "\n".join(lines)
    return json.dumps(model.model_dump(mode="json"), sort_keys=True, indent=2, ensure_ascii=False, default=str)


def main(argv: Optional[List[str]] = None) -> int:
    """Точка входа; возвращает код выхода."""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # --help и --version завершаются с кодом 0
        return EXIT_OK if not e.code else EXIT_INVALID_INPUT
    configure_logging(logging.DEBUG if args.verbose else settings.LOG_LEVEL)

    try:
        model = run(args, argv)
    except NilformError as e:
        logger.warning("%s: %s", e.error, e.detail)
        response = handle_error(e)
        print(render(response, 'json'))
        return response.exit_code
    except Exception as e:
        logger.exception("Необработанная ошибка")
        print(render(handle_generic_error(e), 'json'))
        return EXIT_INVALID_INPUT

    print(render(model, args.output))
    if isinstance(model, Report) and model.counterexample:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
