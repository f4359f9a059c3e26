//! Prints the shipped action table to stdout.

#[path = "../tests/support/fixture.rs"]
mod fixture;

fn main() {
    print!("{}", fixture::render());
}
