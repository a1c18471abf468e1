import sys

from torica.ordres import run_command


def main():
    informe, codi = run_command(sys.argv[1:])
    if informe is not None:
        sys.stdout.write(informe.render())
    sys.exit(codi)


if __name__ == "__main__":
    main()
