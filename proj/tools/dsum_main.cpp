#include "dsum/cli.hpp"

int main(int argc, char** argv) { return dsum::run(argc, argv); }
