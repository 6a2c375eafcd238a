#include "gravent/cli/app.hpp"

int main(int argc, char** argv) { return gravent::cli::run(argc, argv); }
