#pragma once

#include "commdetect/agglomerative.hpp"
#include "commdetect/dendrogram.hpp"
#include "commdetect/errors.hpp"
#include "commdetect/fastgreedy.hpp"
#include "commdetect/girvan_newman.hpp"
#include "commdetect/graph.hpp"
#include "commdetect/io.hpp"
#include "commdetect/louvain.hpp"
#include "commdetect/modularity.hpp"
#include "commdetect/neighbor_matrix.hpp"
#include "commdetect/partition.hpp"
#include "commdetect/serialize.hpp"
