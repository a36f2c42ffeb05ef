package org.eclipse.jdt.core.dom;

public class CommentProbe {
    public Comment[] probeExtended(ASTNode node) {
        if (this.extendedPtr >= 0) {
            int[] range = null;
            for (int i = 0; range == null && i <= this.extendedPtr; i++) {
                if (this.extendedNodes[i] == node) range = this.extendedIndexes[i];
            }
            if (range != null) {
                this.scratchStart = range[0];
                return this.scratch;
            }
        }
        return null;
    }

    public Comment[] probeLeading(ASTNode node) {
        if (this.extendedPtr >= 0) {
            int[] range = null;
            for (int i = 0; range == null && i <= this.extendedPtr; i++) {
                if (this.extendedNodes[i] == node) range = this.extendedIndexes[i];
            }
            if (range != null) {
                this.scratchStart = range[0];
                return this.scratch;
            }
        }
        return null;
    }

    public Comment[] probeTrailing(ASTNode node) {
        if (this.extendedPtr >= 0) {
            int[] range = null;
            for (int i = 0; range == null && i <= this.extendedPtr; i++) {
                if (this.extendedNodes[i] == node) range = this.extendedIndexes[i];
            }
            if (range != null) {
                this.scratchStart = range[0];
                return this.scratch;
            }
        }
        return null;
    }

    public Comment[] probeJavadoc(ASTNode node) {
        if (this.extendedPtr >= 0) {
            int[] range = null;
            for (int i = 0; range == null && i <= this.extendedPtr; i++) {
                if (this.extendedNodes[i] == node) range = this.extendedIndexes[i];
            }
            if (range != null) {
                this.scratchStart = range[0];
                return this.scratch;
            }
        }
        return null;
    }

    public Comment[] probeBlock(ASTNode node) {
        if (this.extendedPtr >= 0) {
            int[] range = null;
            for (int i = 0; range == null && i <= this.extendedPtr; i++) {
                if (this.extendedNodes[i] == node) range = this.extendedIndexes[i];
            }
            if (range != null) {
                this.scratchStart = range[0];
                return this.scratch;
            }
        }
        return null;
    }
}
