package org.eclipse.swt.widgets;

public class TableItem {
    public Font getFont() {
        checkWidget();
        if (!parent.checkData(this, true)) error(SWT.ERROR_WIDGET_DISPOSED);
        return font != null ? font : parent.inheritedValue(SWT.FONT);
    }

    public Color getBackground() {
        checkWidget();
        if (!parent.checkData(this, true)) error(SWT.ERROR_WIDGET_DISPOSED);
        return background != null ? background : parent.inheritedValue(SWT.BACKGROUND);
    }

    public Color getForeground() {
        checkWidget();
        if (!parent.checkData(this, true)) error(SWT.ERROR_WIDGET_DISPOSED);
        return foreground != null ? foreground : parent.inheritedValue(SWT.FOREGROUND);
    }

    public Image getImage() {
        checkWidget();
        if (!parent.checkData(this, true)) error(SWT.ERROR_WIDGET_DISPOSED);
        return image != null ? image : parent.inheritedValue(SWT.IMAGE);
    }

    public String getText() {
        checkWidget();
        if (!parent.checkData(this, true)) error(SWT.ERROR_WIDGET_DISPOSED);
        return text != null ? text : parent.inheritedValue(SWT.TEXT);
    }

    public Rectangle getBounds() {
        if (!parent.checkData(this, true)) error(SWT.ERROR_WIDGET_DISPOSED);
        return bounds != null ? bounds : parent.inheritedValue(SWT.BOUNDS);
    }
}
