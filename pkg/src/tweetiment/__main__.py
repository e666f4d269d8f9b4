"""Entry point for python -m tweetiment."""

from tweetiment.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
