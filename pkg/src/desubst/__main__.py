from desubst.cli import main

main()
