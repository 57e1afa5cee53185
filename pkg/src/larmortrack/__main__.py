from larmortrack.cli import main

main()
