#include "cli.h"

int main(int argc, char** argv) { return stcut::cli::main_entry(argc, argv); }
