#include "jordanlens/cli.hpp"

int main(int argc, char** argv) { return jordanlens::cli::run(argc, argv); }
