package org.eclipse.jdt.core.dom;

public class DefaultCommentMapper {
    public Comment[] getLeadingComments(ASTNode node) {
        if (this.leadingPtr >= 0) {
            int[] range = null;
            for (int i = 0; range == null && i <= this.leadingPtr; i++) {
                if (this.leadingNodes[i] == node) range = this.leadingIndexes[i];
            }
            if (range != null) {
                int length = range[1] - range[0] + 1;
                Comment[] leadComments = new Comment[length];
                System.arraycopy(this.comments, range[0], leadComments, 0, length);
                return leadComments;
            }
        }
        return null;
    }

    public Comment[] getTrailingComments(ASTNode node) {
        if (this.trailingPtr >= 0) {
            int[] range = null;
            for (int j = 0; range == null && j <= this.trailingPtr; j++) {
                if (this.trailingNodes[j] == node) range = this.trailingIndexes[j];
            }
            if (range != null) {
                int size = range[1] - range[0] + 1;
                Comment[] trailComments = new Comment[size];
                System.arraycopy(this.comments, range[0], trailComments, 0, size);
                return trailComments;
            }
        }
        return null;
    }

    public Comment[] getJavadocComments(ASTNode target) {
        if (this.javadocPtr >= 0) {
            int[] span = null;
            for (int k = 0; span == null && k <= this.javadocPtr; k++) {
                if (this.javadocNodes[k] == target) span = this.javadocIndexes[k];
            }
            if (span != null) {
                int length = span[1] - span[0] + 1;
                Comment[] docs = new Comment[length];
                System.arraycopy(this.comments, span[0], docs, 0, length);
                return docs;
            }
        }
        return null;
    }

    public Comment[] getLineComments(ASTNode node) {
        if (this.linePtr >= 0) {
            int[] bounds = null;
            for (int n = 0; bounds == null && n <= this.linePtr; n++) {
                if (this.lineNodes[n] == node) bounds = this.lineIndexes[n];
            }
            if (bounds != null) {
                int count = bounds[1] - bounds[0] + 1;
                Comment[] lines = new Comment[count];
                System.arraycopy(this.comments, bounds[0], lines, 0, count);
                return lines;
            }
        }
        return null;
    }

    public Comment[] getBlockComments(ASTNode key) {
        if (this.blockPtr >= 0) {
            int[] found = null;
            for (int p = 0; found == null && p <= this.blockPtr; p++) {
                if (this.blockNodes[p] == key) found = this.blockIndexes[p];
            }
            if (found != null) {
                int total = found[1] - found[0] + 1;
                Comment[] blocks = new Comment[total];
                System.arraycopy(this.comments, found[0], blocks, 0, total);
                return blocks;
            }
        }
        return null;
    }

    public Comment[] getExtendedComments(ASTNode node) {
        if (this.extendedPtr >= 0) {
            int[] range = null;
            for (int i = 0; range == null && i <= this.extendedPtr; i++) {
                if (this.extendedNodes[i] == node) range = this.extendedIndexes[i];
            }
            if (range != null) {
                System.arraycopy(this.comments, range[0], this.scratch, 0, range[1] - range[0] + 1);
                return this.scratch;
            }
        }
        return null;
    }
}
