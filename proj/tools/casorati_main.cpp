#include "casorati/cli.hpp"

int main(int argc, char** argv) { return casorati::run(argc, argv); }
