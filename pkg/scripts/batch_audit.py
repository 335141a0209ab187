#!/usr/bin/env python3
"""
Скрипт для пакетного анализа документов алгебр Ли.
Запускает analyze и/или decompose для всех JSON-документов директории.
"""

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from pathlib import Path

# Добавляем путь к проекту
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from nilform.cli.commands import cmd_analyze, cmd_decompose
from nilform.cli.documents import entry_to_document, load
from nilform.cli.errors import EXIT_COUNTEREXAMPLE, EXIT_OK, NilformError
from nilform.core.gallery import get_entry, list_entries

COMMANDS = {
    'analyze': cmd_analyze,
    'decompose': cmd_decompose,
}


def parse_arguments(argv=None):
    """Парсинг аргументов командной строки."""
    parser = argparse.ArgumentParser(
        description='Пакетный анализ документов алгебр Ли'
    )

    parser.add_argument('input_dir',
                        help='Директория с JSON-документами')

    parser.add_argument('--commands', '-c',
                        nargs='+',
                        choices=sorted(COMMANDS),
                        default=['analyze', 'decompose'],
                        help='Команды для каждого документа (по умолчанию: обе)')

    parser.add_argument('--recursive', '-r',
                        action='store_true',
                        help='Рекурсивный поиск файлов')

    parser.add_argument('--workers', '-w',
                        type=int,
                        default=2,
                        help='Количество потоков (по умолчанию: 2)')

    parser.add_argument('--seed',
                        type=int,
                        default=None,
                        help='Зерно разложения Леви')

    parser.add_argument('--report', '-rep',
                        default=None,
                        help='Путь к JSON-отчету (по умолчанию: input_dir/batch_audit_<время>.json)')

    parser.add_argument('--export-gallery',
                        action='store_true',
                        help='Записать документы галереи в input_dir перед анализом')

    parser.add_argument('--verbose', '-v',
                        action='store_true',
                        help='Подробный вывод')

    return parser.parse_args(argv)


def find_documents(input_dir: Path, recursive: bool) -> list:
    """Все *.json в директории, без отчетов пакетного анализа."""
    pattern = "**/*.json" if recursive else "*.json"
    return sorted(p for p in input_dir.glob(pattern) if not p.name.startswith("batch_audit_"))


def export_gallery(target_dir: Path) -> list:
    """Записывает документы всех записей галереи и возвращает пути."""
    paths = []
    for name in list_entries():
        path = target_dir / f"{name}.json"
        document = entry_to_document(get_entry(name))
        path.write_text(json.dumps(document.model_dump(mode="json"), sort_keys=True, indent=2, ensure_ascii=False),
                        encoding='utf-8')
        paths.append(path)
    return paths


def process_single_document(path: Path, commands: list, seed, verbose: bool) -> dict:
    """
    Анализирует один документ.

    Args:
        path: Путь к документу
        commands: Имена команд
        seed: Зерно разложения Леви
        verbose: Подробный вывод

    Returns:
        Результаты по командам с кодами выхода
    """
    start_time = time.time()
    outcome = {'document': str(path), 'results': {}, 'success': True, 'error': None}
    try:
        doc = load(str(path))
    except NilformError as e:
        outcome.update(success=False, error=e.detail, exit_code=e.exit_code)
        if verbose:
            print(f"  ❌ Ошибка: {path.name} - {e.detail}")
        return outcome

    outcome['digest'] = doc.digest
    for name in commands:
        try:
            report = COMMANDS[name](doc, f"batch {name}", seed)
            outcome['results'][name] = {
                'exit_code': EXIT_COUNTEREXAMPLE if report.counterexample else EXIT_OK,
                'summary': report.summary,
                'verdicts': report.verdicts,
            }
        except NilformError as e:
            outcome['results'][name] = {
                'exit_code': e.exit_code,
                'summary': e.detail,
                'violations': e.violations,
            }
    outcome['counterexample'] = any(
        r['exit_code'] == EXIT_COUNTEREXAMPLE for r in outcome['results'].values()
    )
    outcome['processing_time'] = time.time() - start_time
    if verbose:
        mark = '❌' if outcome['counterexample'] else '✅'
        print(f"  {mark} {path.name} ({outcome['processing_time']:.2f} сек)")
    return outcome


def create_report(results: list, input_dir: Path, report_path: Path) -> dict:
    """Сохраняет сводный JSON-отчет."""
    loaded = sum(1 for r in results if r['success'])
    counterexamples = [r['document'] for r in results if r.get('counterexample')]
    report = {
        'batch_audit_report': {
            'timestamp': datetime.now().isoformat(),
            'input_dir': str(input_dir),
            'statistics': {
                'total_documents': len(results),
                'loaded': loaded,
                'invalid': len(results) - loaded,
                'counterexamples': len(counterexamples),
            },
            'counterexample_documents': counterexamples,
            'documents': results,
        }
    }
    with open(report_path, 'w', encoding='utf-8') as f:
        json.dump(report, f, indent=2, ensure_ascii=False, sort_keys=True, default=str)
    print(f"\n📊 Отчет сохранен: {report_path}")
    return report


def main(argv=None):
    """Основная функция."""
    args = parse_arguments(argv)

    print("=" * 70)
    print("ПАКЕТНЫЙ АНАЛИЗ ДОКУМЕНТОВ")
    print("=" * 70)

    input_dir = Path(args.input_dir)
    if args.export_gallery:
        input_dir.mkdir(parents=True, exist_ok=True)
        exported = export_gallery(input_dir)
        print(f"\n📁 Записано документов галереи: {len(exported)}")

    if not input_dir.exists():
        print(f"❌ Входная директория не найдена: {input_dir}")
        return 1

    documents = find_documents(input_dir, args.recursive)
    if not documents:
        print("❌ Не найдено документов для анализа")
        return 1
    print(f"\n🔄 Документов: {len(documents)}, потоков: {args.workers}")

    results = []
    with ThreadPoolExecutor(max_workers=args.workers) as executor:
        futures = [
            executor.submit(process_single_document, path, args.commands, args.seed, args.verbose)
            for path in documents
        ]
        for path, future in zip(documents, futures):
            try:
                results.append(future.result())
            except Exception as e:
                print(f"  ❌ Ошибка в потоке: {e}")
                results.append({'document': str(path), 'success': False, 'error': str(e)})

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    report_path = Path(args.report) if args.report else input_dir / f"batch_audit_{timestamp}.json"
    report = create_report(results, input_dir, report_path)

    statistics = report['batch_audit_report']['statistics']
    print(f"\n✅ Загружено: {statistics['loaded']} из {statistics['total_documents']}")
    if statistics['counterexamples']:
        print(f"⚠  Контрпримеры: {statistics['counterexamples']}")
        return EXIT_COUNTEREXAMPLE

    print(f"\n🎉 Пакетный анализ завершен!")
    return 0


if __name__ == "__main__":
    sys.exit(main())
