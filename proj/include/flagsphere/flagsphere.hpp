#pragma once

#include "flagsphere/complex.hpp"
#include "flagsphere/vectors.hpp"
#include "flagsphere/isomorphism.hpp"
#include "flagsphere/homology.hpp"
#include "flagsphere/recognition.hpp"
#include "flagsphere/constructions.hpp"
#include "flagsphere/certification.hpp"
#include "flagsphere/search.hpp"
#include "flagsphere/io.hpp"
